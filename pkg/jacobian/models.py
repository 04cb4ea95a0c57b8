"""
The group law in the large (L = 3D₀), medium (L = 2D₀) and small (L = 3D₀, d₀ = g+1) models.

addflip(x, y) = −(x + y) is the primitive; add and sub are built from it and negate.
"""

import logging
from typing import NamedTuple, Optional

import numpy as np

from arithmetic.linalg import Subspace
from curves.curve import CurveModel, MissingTableError, ModelKind
from curves.hyperelliptic import random_points, spec_of
from divisors.divisor import (
    DegreeMismatchError,
    DegreeRangeError,
    DivisorRep,
    SectionChoice,
    add_divisors,
    choose_section,
    divide,
    divide_spaces,
    flip,
    membership,
    mul_image,
    multiply_section,
    require_on_curve,
)
from divisors.points import points_divisor
from jacobian.jacobian import JacobianPoint, require_same_curve

logger = logging.getLogger(__name__)


def _section_product(d: DivisorRep, section: np.ndarray, n: int, degree: int) -> DivisorRep:
    """f·H⁰(nD₀) for a section f of H⁰(mD₀), tagged with the degree of its divisor of zeros."""
    c = d.curve
    w = multiply_section(c.table(d.ambient_m, n), section, c.full_space(n))
    return DivisorRep(c, d.ambient_m + n, degree, w)


# Large model


def _large_addflip(x: JacobianPoint, y: JacobianPoint, fast_path: bool) -> JacobianPoint:
    total = add_divisors(x.divisor, y.divisor, fast_path=fast_path)
    return JacobianPoint.from_divisor(flip(total))


def _large_negate(x: JacobianPoint) -> JacobianPoint:
    c = x.curve
    half = divide(x.divisor, DivisorRep.empty(c, 1), 2)
    # (f) = D + E on 2D₀, so E is the negation
    target = _section_product(half, choose_section(half.w), 3, 2 * c.d0)
    return JacobianPoint.from_divisor(divide(target, half, 3))


def _large_sub(x: JacobianPoint, y: JacobianPoint) -> JacobianPoint:
    """x − y with a single flip: H⁰(2D₀ − D_x), then f·W_{D_y} divided by it, then flip."""
    c = x.curve
    half = divide(x.divisor, DivisorRep.empty(c, 1), 2)
    f = choose_section(half.w)
    target = DivisorRep(c, 5, 3 * c.d0, multiply_section(c.table(2, 3), f, y.w))
    middle = divide(target, half, 3)
    return JacobianPoint.from_divisor(flip(middle))


# Medium model


def _medium_addflip(x: JacobianPoint, y: JacobianPoint) -> JacobianPoint:
    c = x.curve
    product = mul_image(x.divisor, y.divisor)
    three = divide(product, DivisorRep.empty(c, 1), 3)
    target = _section_product(three, choose_section(three.w), 2, 3 * c.d0)
    return JacobianPoint.from_divisor(divide(target, three, 2))


# Small model


def _small_membership(c: CurveModel, w: Subspace) -> bool:
    """W′ = {s ∈ H⁰(4D₀) : s·w ⊂ f·H⁰(4D₀)} must have codimension 2d₀."""
    f = choose_section(w)
    plus = multiply_section(c.table(3, 4), f, c.full_space(4))
    flipped = divide_spaces(c.table(4, 3), plus, w)
    logger.debug("Small membership: codim W′ = %d, accepting %d", flipped.codim, 2 * c.d0)
    return flipped.codim == 2 * c.d0


def _small_addflip(x: JacobianPoint, y: JacobianPoint) -> JacobianPoint:
    c = x.curve
    product = mul_image(x.divisor, y.divisor)
    three = divide(product, DivisorRep.empty(c, 3), 3)
    four = divide(product, DivisorRep.empty(c, 2), 4)
    target = _section_product(three, choose_section(three.w), 4, 3 * c.d0)
    return JacobianPoint.from_divisor(divide(target, four, 3))


def _small_negate(x: JacobianPoint) -> JacobianPoint:
    c = x.curve
    up = mul_image(DivisorRep.empty(c, 2), x.divisor)
    half = divide(up, DivisorRep.empty(c, 3), 2)
    target = _section_product(half, choose_section(half.w), 4, 2 * c.d0)
    return JacobianPoint.from_divisor(divide(target, x.divisor, 3))


# Dispatch


def addflip(x: JacobianPoint, y: JacobianPoint, fast_path: bool = True) -> JacobianPoint:
    """
    −(x + y).

    Args:
        x (JacobianPoint): First point.
        y (JacobianPoint): Second point on the same model.
        fast_path (bool): Large model only; False forces the general divisor addition.

    Returns:
        JacobianPoint: The class −(x + y).
    """
    require_same_curve(x, y)
    kind = x.curve.kind
    if kind is ModelKind.LARGE:
        return _large_addflip(x, y, fast_path)
    if kind is ModelKind.MEDIUM:
        return _medium_addflip(x, y)
    return _small_addflip(x, y)


def negate(x: JacobianPoint) -> JacobianPoint:
    kind = x.curve.kind
    if kind is ModelKind.LARGE:
        return _large_negate(x)
    if kind is ModelKind.MEDIUM:
        return JacobianPoint.from_divisor(flip(x.divisor))
    return _small_negate(x)


def add(x: JacobianPoint, y: JacobianPoint, fast_path: bool = True) -> JacobianPoint:
    return negate(addflip(x, y, fast_path=fast_path))


def sub(x: JacobianPoint, y: JacobianPoint, streamlined: bool = False) -> JacobianPoint:
    """x − y with one negation; the streamlined single-flip method is available on the large model."""
    require_same_curve(x, y)
    if streamlined and x.curve.kind is ModelKind.LARGE:
        return _large_sub(x, y)
    return addflip(negate(x), y)


def membership_point(c: CurveModel, w: Subspace) -> bool:
    """Whether a codimension-d₀ subspace of V is a point of the given model."""
    if w.codim != c.d0:
        logger.error("Membership asked about codim %d on a model with d0 = %d", w.codim, c.d0)
        raise DegreeMismatchError(f"A point needs codimension d₀ = {c.d0}, got {w.codim}.")
    if c.kind is ModelKind.SMALL:
        return _small_membership(c, w)
    return membership(c, w, c.d0)


def random_point(c: CurveModel, rng: np.random.Generator) -> JacobianPoint:
    """The class of d₀ distinct random rational points minus D₀."""
    points = random_points(spec_of(c), c.d0, rng)
    logger.debug("Random point on %s model from %s", c.kind.value, points)
    return JacobianPoint.from_divisor(points_divisor(c, points))


# Riemann–Roch


class RiemannRochResult(NamedTuple):
    dimension: int
    effective: Optional[DivisorRep]


def riemann_roch(
    c: CurveModel,
    d1: DivisorRep,
    d0: DivisorRep,
    choice: SectionChoice = SectionChoice.DETERMINISTIC,
    rng: Optional[np.random.Generator] = None,
) -> RiemannRochResult:
    """
    dim H⁰(D₁ − D₀), and an effective E ∼ D₁ − D₀ when it is nonzero.

    With D₁′ the flip of D₁, H⁰(L − D₁′ − D₀) ≅ H⁰(D₁ − D₀). A nonzero h there has (h) = D₁′ + D₀ + E, and W_E is
    recovered by dividing h·H⁰(2L) by W_{D₁′} · W_{D₀} inside H⁰(3L).

    Args:
        c (CurveModel): A large or medium model.
        d1 (DivisorRep): D₁ in V, 2g+1 ≤ deg ≤ N − 2g − 1.
        d0 (DivisorRep): D₀ in V, same range.
        choice (SectionChoice): How f and h are picked.
        rng (Optional[np.random.Generator]): Source for random choice.

    Returns:
        RiemannRochResult: The dimension and W_E (None when the dimension is 0).
    """
    m = c.ambient_m
    if not c.has_table(m, 2 * m):
        logger.error("No Riemann-Roch table on the %s model", c.kind.value)
        raise MissingTableError(f"The {c.kind.value} model carries no table ({m},{2 * m}).")
    for d in (d1, d0):
        require_on_curve(c, d)
        if d.ambient_m != m:
            raise DegreeRangeError(f"Riemann–Roch needs divisors in V = H⁰({m}D₀).")
        if not 2 * c.genus + 1 <= d.degree <= c.degree - 2 * c.genus - 1:
            logger.error("Riemann-Roch degree %d out of range", d.degree)
            raise DegreeRangeError(f"Riemann–Roch needs 2g+1 ≤ deg ≤ N − 2g − 1, got {d.degree}.")
    flipped = flip(d1, choice, rng)
    product = mul_image(flipped, d0)
    space = divide(product, DivisorRep.empty(c, m), m)
    dimension = space.w.dim
    logger.debug("Riemann-Roch: deg D1 = %d, deg D0 = %d, dimension %d", d1.degree, d0.degree, dimension)
    if dimension == 0:
        return RiemannRochResult(0, None)
    h = choose_section(space.w, choice, rng)
    table = c.table(m, 2 * m)
    target = multiply_section(table, h, c.full_space(2 * m))
    w_e = divide_spaces(table, target, product.w)
    return RiemannRochResult(dimension, DivisorRep(c, m, d1.degree - d0.degree, w_e))
