"""DivisorRep plain-data form: {ambient_m, degree, basis} with the basis in the Matrix text format."""

import logging
from typing import Any, Dict

from arithmetic.linalg import Subspace
from curves.curve import CurveModel
from curves.serialization import CurveFormatError
from divisors.divisor import DivisorRep

logger = logging.getLogger(__name__)


def divisor_to_dict(d: DivisorRep) -> Dict[str, Any]:
    return {"ambient_m": d.ambient_m, "degree": d.degree, "basis": d.w.to_rows()}


def divisor_from_dict(c: CurveModel, data: Dict[str, Any]) -> DivisorRep:
    """
    Rebuild a divisor on a curve.

    Args:
        c (CurveModel): The curve the divisor lives on.
        data (Dict[str, Any]): Parsed divisor data.

    Returns:
        DivisorRep: The divisor, re-canonicalized.
    """
    try:
        m = int(data["ambient_m"])
        w = Subspace.span(c.field, data["basis"], c.h0(m))
        return DivisorRep(c, m, int(data["degree"]), w)
    except (KeyError, TypeError, LookupError) as e:
        logger.error("Malformed divisor data: %s", e)
        raise CurveFormatError(f"Malformed divisor data: {e}") from e
