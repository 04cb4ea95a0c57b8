"""Points of the Jacobian: x_D = [D − D₀] for an effective D of degree d₀, held as W_D ⊂ V = H⁰(L)."""

import logging
from dataclasses import dataclass

from arithmetic.linalg import AmbientMismatchError, Subspace
from curves.curve import CurveModel
from divisors.divisor import DegreeMismatchError, DivisorRep, choose_section, divide_spaces, multiply_section

logger = logging.getLogger(__name__)


class InconsistentStateError(RuntimeError):
    """Raised when a computed dimension is impossible for valid inputs."""


@dataclass(frozen=True, eq=False)
class JacobianPoint:
    """
    A Jacobian element on a curve model.

    Two points compare equal with == only when their subspaces are identical; use equal() for equality of classes.
    """

    curve: CurveModel
    w: Subspace

    def __post_init__(self):
        if self.w.ambient_dim != self.curve.dim_v:
            raise AmbientMismatchError(f"Point subspace of dimension {self.w.ambient_dim}, dim V = {self.curve.dim_v}.")
        if self.w.codim != self.curve.d0:
            logger.error("Point subspace has codim %d, expected d0 = %d", self.w.codim, self.curve.d0)
            raise DegreeMismatchError(f"A point needs codimension d₀ = {self.curve.d0}, got {self.w.codim}.")

    @classmethod
    def from_divisor(cls, d: DivisorRep) -> "JacobianPoint":
        if d.ambient_m != d.curve.ambient_m or d.degree != d.curve.d0:
            raise DegreeMismatchError(f"{d!r} is not a divisor of degree d₀ in V.")
        return cls(d.curve, d.w)

    @property
    def divisor(self) -> DivisorRep:
        return DivisorRep(self.curve, self.curve.ambient_m, self.curve.d0, self.w)

    def __eq__(self, other) -> bool:
        return isinstance(other, JacobianPoint) and other.curve.kind == self.curve.kind and other.w == self.w

    def __hash__(self) -> int:
        return hash((self.curve.kind, self.w))

    def __repr__(self) -> str:
        return f"JacobianPoint(kind={self.curve.kind.value}, dim={self.w.dim}, ambient_dim={self.w.ambient_dim})"


def require_same_curve(x: JacobianPoint, y: JacobianPoint):
    if x.curve is not y.curve and not (x.curve.same_curve(y.curve) and x.curve.kind == y.curve.kind):
        logger.error("Points on different curve models: %r, %r", x, y)
        raise AmbientMismatchError("Points live on different curve models.")


def zero(c: CurveModel) -> JacobianPoint:
    """The class of D₀ itself."""
    return JacobianPoint(c, c.w_d0)


def equality_dimension(x: JacobianPoint, y: JacobianPoint) -> int:
    """
    dim H⁰(L − D′ − E), where f ∈ W_D has (f) = D + D′ and E is y's divisor.

    f·W_E is H⁰(2L − D − D′ − E); dividing it by W_D leaves H⁰(L − D′ − E), a space of degree 0, so the dimension
    is 1 when D ∼ E and 0 otherwise.

    Args:
        x (JacobianPoint): First point.
        y (JacobianPoint): Second point.

    Returns:
        int: 0 or 1.
    """
    require_same_curve(x, y)
    c = x.curve
    m = c.ambient_m
    table = c.table(m, m)
    target = multiply_section(table, choose_section(x.w), y.w)
    dimension = divide_spaces(table, target, x.w).dim
    if dimension > 1:
        logger.error("Equality test produced a space of dimension %d", dimension)
        raise InconsistentStateError(f"Equality test space has dimension {dimension}; the inputs are not points.")
    return dimension


def equal(x: JacobianPoint, y: JacobianPoint) -> bool:
    """True iff x and y are the same class."""
    return equality_dimension(x, y) == 1
