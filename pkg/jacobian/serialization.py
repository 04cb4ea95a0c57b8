"""Point file format: the divisor form plus a model tag and the field."""

import json
import logging
from typing import Any, Dict

from curves.curve import CurveModel
from curves.serialization import CurveFormatError
from divisors.divisor import DivisorRep
from divisors.serialization import divisor_from_dict, divisor_to_dict
from jacobian.jacobian import JacobianPoint

logger = logging.getLogger(__name__)


def point_to_dict(x: JacobianPoint) -> Dict[str, Any]:
    return {"model": x.curve.kind.value, "p": x.curve.field.modulus, **divisor_to_dict(x.divisor)}


def _check_tag(c: CurveModel, data: Dict[str, Any]):
    if not isinstance(data, dict):
        raise CurveFormatError("Point data must be a JSON object.")
    model, p = data.get("model"), data.get("p")
    if model != c.kind.value or p != c.field.modulus:
        logger.error("Point tagged %s/%s used on a %s curve over GF(%d)", model, p, c.kind.value, c.field.modulus)
        raise CurveFormatError(
            f"Point is tagged {model} over GF({p}); the curve is {c.kind.value} over GF({c.field.modulus})."
        )


def divisor_data(c: CurveModel, data: Dict[str, Any]) -> DivisorRep:
    """The tagged divisor without the point checks, for membership queries on arbitrary subspaces."""
    _check_tag(c, data)
    return divisor_from_dict(c, data)


def point_from_dict(c: CurveModel, data: Dict[str, Any]) -> JacobianPoint:
    """
    Rebuild a point on a curve.

    Args:
        c (CurveModel): The curve the point was written for.
        data (Dict[str, Any]): Parsed point data.

    Returns:
        JacobianPoint: The point; the basis is re-canonicalized.
    """
    return JacobianPoint.from_divisor(divisor_data(c, data))


def dump_point(x: JacobianPoint, path: str):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(point_to_dict(x), handle)
        handle.write("\n")
    logger.info("Wrote %s point to %s", x.curve.kind.value, path)


def read_point_data(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as e:
        logger.error("Point file %s is not valid JSON: %s", path, e)
        raise CurveFormatError(f"{path} is not valid JSON: {e}") from e


def load_point(c: CurveModel, path: str) -> JacobianPoint:
    """Read a point file for the given curve."""
    return point_from_dict(c, read_point_data(path))
