"""
Mumford representation and Cantor's algorithm on y² = f(x), deg f = 2g+1.

A reduced class is a pair (a, b) of polynomials over GF(p) with a monic, deg b < deg a ≤ g and b² ≡ f (mod a).
Polynomials are sympy Polys over GF(p); coefficient lists in files are ascending.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Poly

from curves.hyperelliptic import X, HyperellipticSpec, random_rational_point

logger = logging.getLogger(__name__)


class InvalidMumfordError(ValueError):
    """Raised when (a, b) violates the Mumford conditions for f."""


def poly(coeffs: Sequence[int], p: int) -> Poly:
    """The polynomial with ascending coefficients over GF(p)."""
    coeffs = [int(c) % p for c in coeffs] or [0]
    return Poly(list(reversed(coeffs)), X, modulus=p)


def coefficients(value: Poly) -> List[int]:
    """Ascending canonical coefficients in [0, p), empty for the zero polynomial."""
    if value.is_zero:
        return []
    p = int(value.get_modulus())
    return [int(c) % p for c in reversed(value.all_coeffs())]


def degree(value: Poly) -> Union[int, float]:
    """deg, with deg 0 = −∞."""
    return -math.inf if value.is_zero else int(value.degree())


def genus_of(f: Poly) -> int:
    return (int(f.degree()) - 1) // 2


@dataclass(frozen=True)
class MumfordDivisor:
    """The class of the divisor cut out by a(x) = 0, y = b(x)."""

    a: Poly
    b: Poly

    @property
    def degree(self) -> int:
        return int(self.a.degree())

    @property
    def modulus(self) -> int:
        return int(self.a.get_modulus())

    def __eq__(self, other) -> bool:
        return isinstance(other, MumfordDivisor) and coefficients(self.a) == coefficients(other.a) and coefficients(
            self.b
        ) == coefficients(other.b)

    def __hash__(self) -> int:
        return hash((tuple(coefficients(self.a)), tuple(coefficients(self.b))))

    def __repr__(self) -> str:
        return f"MumfordDivisor(a={coefficients(self.a)}, b={coefficients(self.b)}, p={self.modulus})"


def identity(p: int) -> MumfordDivisor:
    return MumfordDivisor(poly([1], p), poly([], p))


def point(p: int, xy: Tuple[int, int]) -> MumfordDivisor:
    """The class of P − P∞ for an affine point P = (x₀, y₀)."""
    x0, y0 = xy
    return MumfordDivisor(poly([-x0, 1], p), poly([y0], p))


def check_mumford(x: MumfordDivisor, f: Poly, reduced: bool = True):
    """
    Raise InvalidMumfordError unless x is a valid (reduced) Mumford pair for f.

    Args:
        x (MumfordDivisor): The pair to check.
        f (Poly): The curve polynomial.
        reduced (bool): Also require deg a ≤ g.
    """
    if x.a.is_zero or int(x.a.LC()) % x.modulus != 1:
        raise InvalidMumfordError("a must be monic.")
    if degree(x.b) >= degree(x.a):
        raise InvalidMumfordError("deg b must be below deg a.")
    if reduced and degree(x.a) > genus_of(f):
        raise InvalidMumfordError(f"deg a = {degree(x.a)} exceeds the genus {genus_of(f)}.")
    if not (x.b * x.b - f).rem(x.a).is_zero:
        raise InvalidMumfordError("b² ≢ f (mod a).")


def cantor_compose(x: MumfordDivisor, y: MumfordDivisor, f: Poly) -> MumfordDivisor:
    """Semi-reduced sum of two classes, before reduction."""
    a1, b1 = x.a, x.b
    a2, b2 = y.a, y.b
    e1, e2, d1 = a1.gcdex(a2)
    if (b1 + b2).is_zero:
        # Opposite or Weierstrass supports: gcd(d1, 0) = d1.
        c1, c2, d = d1.one, d1.zero, d1
    else:
        c1, c2, d = d1.gcdex(b1 + b2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    a = (a1 * a2).exquo(d * d)
    b = (s1 * a1 * b2 + s2 * a2 * b1 + s3 * (b1 * b2 + f)).exquo(d).rem(a)
    return MumfordDivisor(a.monic(), b)


def cantor_reduce(x: MumfordDivisor, f: Poly) -> MumfordDivisor:
    """Reduce a semi-reduced pair until deg a ≤ g."""
    g = genus_of(f)
    a, b = x.a, x.b
    while degree(a) > g:
        a = (f - b * b).exquo(a).monic()
        b = (-b).rem(a)
    return MumfordDivisor(a, b.rem(a))


def cantor_add(x: MumfordDivisor, y: MumfordDivisor, f: Poly) -> MumfordDivisor:
    """Reduced Mumford form of the class sum."""
    return cantor_reduce(cantor_compose(x, y, f), f)


def cantor_neg(x: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(x.a, (-x.b).rem(x.a))


def cantor_sub(x: MumfordDivisor, y: MumfordDivisor, f: Poly) -> MumfordDivisor:
    return cantor_add(x, cantor_neg(y), f)


def random_mumford(g: int, f: Poly, rng: np.random.Generator, terms: Optional[int] = None) -> MumfordDivisor:
    """
    A random class: a sum of random rational points.

    Args:
        g (int): The genus, used for the default number of terms 2g+1.
        f (Poly): The curve polynomial.
        rng (np.random.Generator): Randomness source.
        terms (Optional[int]): Number of points to add.

    Returns:
        MumfordDivisor: A reduced class.
    """
    p = int(f.get_modulus())
    spec = HyperellipticSpec(p, tuple(coefficients(f)))
    total = identity(p)
    for _ in range(2 * g + 1 if terms is None else terms):
        total = cantor_add(total, point(p, random_rational_point(spec, rng)), f)
    return total


def mumford_to_dict(x: MumfordDivisor) -> Dict[str, Any]:
    return {"a": coefficients(x.a), "b": coefficients(x.b)}


def mumford_from_dict(data: Dict[str, Any], f: Poly) -> MumfordDivisor:
    """Parse {a, b} (ascending coefficients) and check it against f."""
    p = int(f.get_modulus())
    try:
        x = MumfordDivisor(poly(data["a"], p), poly(data["b"], p))
    except (KeyError, TypeError, ValueError) as e:
        logger.error("Malformed Mumford data: %s", e)
        raise InvalidMumfordError(f"Malformed Mumford data: {e}") from e
    check_mumford(x, f)
    return x
