"""Curve file format: JSON text with a fixed key order."""

import json
import logging
from typing import Any, Dict

import numpy as np

from arithmetic.field import PrimeField
from arithmetic.linalg import AmbientMismatchError, Subspace, as_array
from curves.curve import CurveModel, ModelKind, MulTable

logger = logging.getLogger(__name__)


class CurveFormatError(ValueError):
    """Raised for malformed curve files."""


def curve_to_dict(c: CurveModel) -> Dict[str, Any]:
    """Plain-data form of a curve; keys in file order, tables sorted by (m, n)."""
    return {
        "p": c.field.modulus,
        "genus": c.genus,
        "d0": c.d0,
        "kind": c.kind.value,
        "f_coeffs": list(c.f_coeffs) if c.f_coeffs is not None else None,
        "h0_dims": {str(m): dim for m, dim in sorted(c.h0_dims.items())},
        "w_d0": c.w_d0.to_rows(),
        "tables": [
            {"m": m, "n": n, "tensor": [[[int(v) for v in row] for row in block] for block in table.tensor]}
            for (m, n), table in sorted(c.tables.items())
        ],
    }


def _require(data: Dict[str, Any], key: str):
    if key not in data:
        logger.error("Curve file is missing '%s'", key)
        raise CurveFormatError(f"Curve file is missing '{key}'.")
    return data[key]


def curve_from_dict(data: Dict[str, Any]) -> CurveModel:
    """
    Rebuild a curve from its plain-data form.

    Args:
        data (Dict[str, Any]): Parsed curve file.

    Returns:
        CurveModel: The curve. Tables are checked for shape against h0_dims; use validate() for the rest.
    """
    try:
        field = PrimeField(_require(data, "p"))
        kind = ModelKind(_require(data, "kind"))
        genus = int(_require(data, "genus"))
        d0 = int(_require(data, "d0"))
        h0_dims = {int(m): int(dim) for m, dim in _require(data, "h0_dims").items()}
        f_coeffs = data.get("f_coeffs")
        f_coeffs = tuple(int(v) % field.modulus for v in f_coeffs) if f_coeffs is not None else None
        dim_v = h0_dims.get(kind.ambient_multiple)
        if dim_v is None:
            raise CurveFormatError(f"h0_dims has no entry for the ambient multiple {kind.ambient_multiple}.")
        w_d0 = Subspace.span(field, _require(data, "w_d0"), dim_v)
        tables = {}
        for entry in _require(data, "tables"):
            m, n = int(entry["m"]), int(entry["n"])
            tensor = np.asarray(entry["tensor"], dtype=object)
            expected = (h0_dims.get(m), h0_dims.get(n), h0_dims.get(m + n))
            if None in expected or tensor.shape != expected:
                raise CurveFormatError(f"Table ({m},{n}) has shape {tensor.shape}, expected {expected}.")
            reduced = as_array(field, tensor.reshape(-1, expected[2])).reshape(expected)
            reduced.flags.writeable = False
            tables[(m, n)] = MulTable(m, n, reduced)
    except CurveFormatError:
        raise
    except (KeyError, TypeError, ValueError, AmbientMismatchError) as e:
        logger.error("Malformed curve file: %s", e)
        raise CurveFormatError(f"Malformed curve file: {e}") from e
    return CurveModel(field, genus, d0, kind, h0_dims, tables, w_d0, f_coeffs)


def dump_curve(c: CurveModel, path: str):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(curve_to_dict(c), handle)
        handle.write("\n")
    logger.info("Wrote %s curve to %s", c.kind.value, path)


def load_curve(path: str) -> CurveModel:
    """Read a curve file."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as e:
        logger.error("Curve file %s is not valid JSON: %s", path, e)
        raise CurveFormatError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise CurveFormatError(f"{path} does not hold a JSON object.")
    return curve_from_dict(data)
