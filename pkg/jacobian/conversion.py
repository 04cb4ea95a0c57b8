"""Moving divisors between ambient bundles, and points between the large, medium and small models."""

import logging
from functools import lru_cache
from typing import Optional

import numpy as np

from arithmetic.linalg import Subspace
from curves.curve import CurveModel, MissingTableError, ModelKind
from curves.hyperelliptic import HyperellipticSpec, build_hyperelliptic, pole_table, spec_of
from divisors.divisor import (
    DegreeRangeError,
    DivisorRep,
    SectionChoice,
    add_divisors,
    divide,
    divide_spaces,
    mul_image,
    multiply_spaces,
)
from divisors.points import infinity_divisor
from jacobian.jacobian import JacobianPoint, zero
from jacobian.models import riemann_roch

logger = logging.getLogger(__name__)

DEFAULT_CONVERSION_ATTEMPTS = 8


class ConversionError(RuntimeError):
    """Raised when a point cannot be re-expressed on the target model."""


def _down(d: DivisorRep, n: int) -> Optional[DivisorRep]:
    c = d.curve
    step = d.ambient_m - n
    if step * c.d0 < 2 * c.genus or not c.has_table(n, step) or step not in c.h0_dims:
        return None
    return divide(d, DivisorRep.empty(c, step), n)


def _up(d: DivisorRep, n: int) -> Optional[DivisorRep]:
    c = d.curve
    step = n - d.ambient_m
    if step * c.d0 < 2 * c.genus + 1 or not c.has_table(d.ambient_m, step) or step not in c.h0_dims:
        return None
    return mul_image(d, DivisorRep.empty(c, step))


def change_ambient(d: DivisorRep, n: int) -> DivisorRep:
    """
    The same divisor in H⁰(nD₀): up by multiplying with a full H⁰(kD₀), down by dividing by one.

    Args:
        d (DivisorRep): D in H⁰(mD₀).
        n (int): The target multiple, with n·d₀ − deg D ≥ 2g+1.

    Returns:
        DivisorRep: D in H⁰(nD₀).
    """
    c = d.curve
    if n == d.ambient_m:
        return d
    if n * c.d0 - d.degree < 2 * c.genus + 1:
        logger.error("Cannot move degree %d to H0(%dD0)", d.degree, n)
        raise DegreeRangeError(f"H⁰({n}D₀) is too small for a divisor of degree {d.degree}.")
    direct = _down(d, n) if n < d.ambient_m else _up(d, n)
    if direct is not None:
        return direct
    for k in sorted(c.h0_dims):
        if k <= max(n, d.ambient_m):
            continue
        middle = _up(d, k)
        if middle is None:
            continue
        result = _down(middle, n)
        if result is not None:
            logger.debug("Moved H0(%dD0) to H0(%dD0) through H0(%dD0)", d.ambient_m, n, k)
            return result
    raise MissingTableError(f"No chain of tables moves H⁰({d.ambient_m}D₀) to H⁰({n}D₀).")


@lru_cache(maxsize=8)
def _large_frame(spec: HyperellipticSpec) -> CurveModel:
    return build_hyperelliptic(spec, ModelKind.LARGE)


def _small_to_large(x: JacobianPoint, large: CurveModel) -> JacobianPoint:
    """[D − (g+1)P∞] = [(D + g·P∞) − (2g+1)P∞]."""
    g = large.genus
    spec = spec_of(large)
    table = pole_table(spec, 3 * g + 3, 3 * g)
    lifted = multiply_spaces(table, x.w, Subspace.full(large.field, table.shape[1]))
    d = DivisorRep(large, large.ambient_m, x.curve.d0, lifted)
    return JacobianPoint.from_divisor(add_divisors(d, infinity_divisor(large, g)))


def _large_to_small(x: JacobianPoint, small: CurveModel, rng: np.random.Generator, attempts: int) -> JacobianPoint:
    """An effective E ∼ D + (g+1)P∞ − D₀ of degree g+1, moved from H⁰((6g+3)P∞) down to H⁰((3g+3)P∞)."""
    large = x.curve
    g = large.genus
    raised = add_divisors(x.divisor, infinity_divisor(large, g + 1))
    base = zero(large).divisor
    choice = SectionChoice.DETERMINISTIC
    for attempt in range(attempts):
        result = riemann_roch(large, raised, base, choice, rng)
        if result.effective is not None:
            table = pole_table(spec_of(large), 3 * g + 3, 3 * g)
            w = divide_spaces(table, result.effective.w, Subspace.full(large.field, table.shape[1]))
            return JacobianPoint(small, w)
        logger.debug("Riemann-Roch space empty on attempt %d; re-randomizing", attempt + 1)
        choice = SectionChoice.RANDOM
    logger.error("Could not reduce the basepoint after %d attempts", attempts)
    raise ConversionError(f"No effective divisor found after {attempts} attempts.")


def convert_model(
    x: JacobianPoint,
    target: CurveModel,
    rng: Optional[np.random.Generator] = None,
    attempts: int = DEFAULT_CONVERSION_ATTEMPTS,
) -> JacobianPoint:
    """
    Re-express a point on another model of the same curve.

    Args:
        x (JacobianPoint): The point.
        target (CurveModel): A model built from the same equation.
        rng (Optional[np.random.Generator]): Source for re-randomized retries.
        attempts (int): Retries for the basepoint reduction.

    Returns:
        JacobianPoint: The same class on the target model.
    """
    source = x.curve
    if not source.same_curve(target):
        logger.error("Conversion between different curves")
        raise ConversionError("Source and target models come from different curves.")
    rng = rng if rng is not None else np.random.default_rng(0)
    if source.kind == target.kind:
        return JacobianPoint(target, x.w)
    if ModelKind.SMALL not in (source.kind, target.kind):
        moved = change_ambient(x.divisor, target.ambient_m)
        return JacobianPoint(target, moved.w)
    if source.kind is ModelKind.SMALL:
        large = target if target.kind is ModelKind.LARGE else _large_frame(spec_of(source))
        lifted = _small_to_large(x, large)
        return lifted if large is target else convert_model(lifted, target, rng, attempts)
    if source.kind is ModelKind.MEDIUM:
        x = convert_model(x, _large_frame(spec_of(source)), rng, attempts)
    return _large_to_small(x, target, rng, attempts)
