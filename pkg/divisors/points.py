"""Divisors supported on rational points of a hyperelliptic model."""

import logging
from functools import reduce
from typing import Iterable, Optional, Tuple

import numpy as np

from arithmetic.linalg import kernel_of
from curves.curve import CurveModel
from curves.hyperelliptic import evaluation_row, infinity_subspace, random_points, spec_of
from divisors.divisor import DivisorRep, union_divisor

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


class PointNotOnCurveError(ValueError):
    """Raised for a point that does not satisfy y² = f(x)."""


def point_divisor(c: CurveModel, point: Point, m: Optional[int] = None) -> DivisorRep:
    """W_P: the sections of H⁰(mD₀) vanishing at an affine rational point."""
    m = c.ambient_m if m is None else m
    spec = spec_of(c)
    x0, y0 = (int(v) % spec.p for v in point)
    if (y0 * y0 - spec.evaluate(x0)) % spec.p:
        logger.error("Point (%d, %d) is not on the curve", x0, y0)
        raise PointNotOnCurveError(f"({x0}, {y0}) does not satisfy y² = f(x) mod {spec.p}.")
    row = evaluation_row(spec, c.genus, m * c.d0, (x0, y0))
    return DivisorRep(c, m, 1, kernel_of(c.field, [row], c.h0(m)))


def points_divisor(c: CurveModel, points: Iterable[Point], m: Optional[int] = None) -> DivisorRep:
    """The reduced divisor P₁ + … + P_k of distinct affine points, as a union of point divisors."""
    m = c.ambient_m if m is None else m
    return reduce(union_divisor, (point_divisor(c, point, m) for point in points), DivisorRep.empty(c, m))


def infinity_divisor(c: CurveModel, k: int, m: Optional[int] = None) -> DivisorRep:
    """k·P∞, for models whose basepoint is a multiple of P∞."""
    m = c.ambient_m if m is None else m
    spec_of(c)  # D₀ must be supported at P∞
    return DivisorRep(c, m, k, infinity_subspace(c.field, c.genus, m * c.d0, k))


def random_divisor(
    c: CurveModel, degree: int, rng: np.random.Generator, m: Optional[int] = None, distinct_x: bool = False
) -> DivisorRep:
    """A sum of degree distinct random rational points."""
    points = random_points(spec_of(c), degree, rng, distinct_x)
    logger.debug("Random divisor on points %s", points)
    return points_divisor(c, points, m)
