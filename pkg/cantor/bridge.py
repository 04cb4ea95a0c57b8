"""
From Mumford pairs to section spaces.

The sections of H⁰(mD₀) vanishing on the affine divisor {a(x) = 0, y = b(x)} are exactly the s₀(x) + s₁(x)·y with
s₀ + s₁·b ≡ 0 (mod a). A reduced class has deg a ≤ g while a point needs a divisor of degree d₀, so the class is
first shifted by a pad of rational points and the pad is added back without reduction. Whatever degree is still
missing is made up at P∞, where D₀ is supported.
"""

import logging
from itertools import combinations, islice
from typing import List, NamedTuple, Tuple

from sympy import Poly

from arithmetic.linalg import Subspace, intersect, kernel_of
from cantor.mumford import (
    MumfordDivisor,
    cantor_add,
    cantor_compose,
    cantor_neg,
    check_mumford,
    coefficients,
    degree,
    identity,
    point,
)
from curves.curve import CurveModel
from curves.hyperelliptic import X, infinity_subspace, iter_rational_points, monomial_basis, spec_of
from jacobian.jacobian import JacobianPoint, equal

logger = logging.getLogger(__name__)

PADDING_ATTEMPTS = 64
# Rational points considered for pads, in order of x.
PAD_STOCK_SIZE = 24


class PaddedDivisor(NamedTuple):
    """The effective divisor {a = 0, y = b} + at_infinity·P∞ of degree d₀."""

    pair: MumfordDivisor
    at_infinity: int

    @property
    def degree(self) -> int:
        return self.pair.degree + self.at_infinity


def _pad_stock(c: CurveModel) -> List[Tuple[int, int]]:
    """One rational point per x coordinate."""
    seen = set()
    stock = []
    for xy in iter_rational_points(spec_of(c)):
        if xy[0] not in seen:
            seen.add(xy[0])
            stock.append(xy)
        if len(stock) == PAD_STOCK_SIZE:
            break
    return stock


def _compose_points(c: CurveModel, points, f: Poly) -> MumfordDivisor:
    total = identity(c.field.modulus)
    for xy in points:
        total = cantor_compose(total, point(c.field.modulus, xy), f)
    return total


def padded_divisor(x: MumfordDivisor, c: CurveModel) -> PaddedDivisor:
    """
    An effective divisor of degree d₀ in the class of x + D₀.

    Pads of k = d₀ − g rational points with distinct x are tried in a fixed order until x − pad has weight r ≤ g and
    shares no x coordinate with the pad; then (x − pad) + pad is composed without reduction and completed with
    (g − r)·P∞. When no pad qualifies (the identity against a one-point pad, say) x itself is completed at P∞.

    Args:
        x (MumfordDivisor): A reduced class.
        c (CurveModel): The model whose basepoint degree is targeted.

    Returns:
        PaddedDivisor: An affine semi-reduced pair and a multiplicity at P∞ summing to d₀.
    """
    f = spec_of(c).polynomial()
    check_mumford(x, f)
    k = c.d0 - c.genus
    for pad_points in islice(combinations(_pad_stock(c), k), PADDING_ATTEMPTS):
        pad = _compose_points(c, pad_points, f)
        shifted = cantor_add(x, cantor_neg(pad), f)
        if degree(shifted.a.gcd(pad.a)) > 0:
            continue
        logger.debug("Padded %r with points %s", x, pad_points)
        return PaddedDivisor(cantor_compose(shifted, pad, f), c.genus - shifted.degree)
    logger.debug("No affine pad for %r; completing at infinity", x)
    return PaddedDivisor(x, c.d0 - x.degree)


def section_space(c: CurveModel, a: Poly, b: Poly, m: int) -> Subspace:
    """The kernel of s₀ + s₁·y ↦ s₀ + s₁·b mod a on the monomial basis of H⁰(mD₀)."""
    p = c.field.modulus
    width = int(a.degree())
    if width == 0:
        return Subspace.full(c.field, c.h0(m))
    x_poly = Poly(X, X, modulus=p)
    columns = []
    for i, e in monomial_basis(c.genus, m * c.d0):
        term = x_poly**i * b if e else x_poly**i
        residue = coefficients(term.rem(a))
        columns.append(residue + [0] * (width - len(residue)))
    return kernel_of(c.field, [list(row) for row in zip(*columns)], len(columns))


def divisor_space(c: CurveModel, padded: PaddedDivisor, m: int) -> Subspace:
    """W_D ⊂ H⁰(mD₀) for the padded divisor D: the affine conditions plus the pole-order cap at P∞."""
    affine = section_space(c, padded.pair.a, padded.pair.b, m)
    return intersect(affine, infinity_subspace(c.field, c.genus, m * c.d0, padded.at_infinity))


def to_subspace(x: MumfordDivisor, c: CurveModel) -> JacobianPoint:
    """The point of c in the class of x."""
    return JacobianPoint(c, divisor_space(c, padded_divisor(x, c), c.ambient_m))


def from_point_eq(x: JacobianPoint, m: MumfordDivisor, c: CurveModel) -> bool:
    """True iff the point x and the Mumford class m agree."""
    return equal(x, to_subspace(m, c))
