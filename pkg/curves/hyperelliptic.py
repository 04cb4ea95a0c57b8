"""
Curve models for odd-degree hyperelliptic curves y² = f(x).

With deg f = 2g+1 there is a single point P∞ at infinity, where x has a pole of order 2 and y one of order 2g+1.
H⁰(k·P∞) has the monomials xⁱyᵉ (e ∈ {0, 1}) of pole order 2i + e(2g+1) ≤ k as a basis. The pole orders are
pairwise distinct, and the basis is kept sorted by them.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

import numpy as np
from sympy import Poly, isprime, symbols

from arithmetic.field import PrimeField, UnsupportedCharacteristicError
from arithmetic.linalg import Subspace
from curves.curve import CurveModel, ModelKind, MulTable

logger = logging.getLogger(__name__)

X = symbols("x")

Monomial = Tuple[int, int]


class SingularCurveError(ValueError):
    """Raised when f is not squarefree."""


class NotHyperellipticError(ValueError):
    """Raised when an operation needs the curve equation but the model does not record one."""


@dataclass(frozen=True)
class HyperellipticSpec:
    """
    The curve y² = f(x) over GF(p).

    f_coeffs are ascending (f_coeffs[k] is the coefficient of x^k); f must be monic of odd degree 2g+1 ≥ 3 and
    squarefree.
    """

    p: int
    f_coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.p == 2:
            raise UnsupportedCharacteristicError("Characteristic 2 hyperelliptic models are not supported.")
        if self.p < 3 or not isprime(self.p):
            raise ValueError(f"p = {self.p} is not an odd prime.")
        coeffs = [int(c) % self.p for c in self.f_coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "f_coeffs", tuple(coeffs))
        degree = len(coeffs) - 1
        if degree < 3 or degree % 2 == 0:
            raise ValueError(f"f must have odd degree at least 3, got degree {degree}.")
        if coeffs[-1] != 1:
            raise ValueError("f must be monic.")
        f = self.polynomial()
        if f.gcd(f.diff(X)).degree() > 0:
            logger.error("Singular model: f = %s is not squarefree mod %d", f.as_expr(), self.p)
            raise SingularCurveError(f"f is not squarefree mod {self.p}; the model is singular.")

    @property
    def genus(self) -> int:
        return (len(self.f_coeffs) - 2) // 2

    def polynomial(self) -> Poly:
        return Poly(list(reversed(self.f_coeffs)), X, modulus=self.p)

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.f_coeffs):
            value = (value * x + c) % self.p
        return value


def pole_order(monomial: Monomial, genus: int) -> int:
    i, e = monomial
    return 2 * i + e * (2 * genus + 1)


def monomial_basis(genus: int, bound: int) -> List[Monomial]:
    """Monomials of H⁰(bound·P∞), sorted by pole order."""
    if bound < 0:
        return []
    monomials = [(i, 0) for i in range(bound // 2 + 1)]
    if bound >= 2 * genus + 1:
        monomials += [(i, 1) for i in range((bound - 2 * genus - 1) // 2 + 1)]
    return sorted(monomials, key=lambda monomial: pole_order(monomial, genus))


def multiplication_tensor(spec: HyperellipticSpec, field: PrimeField, bound_a: int, bound_b: int) -> np.ndarray:
    """Products of the monomial bases of H⁰(bound_a·P∞) and H⁰(bound_b·P∞) in the basis of the sum, y² → f(x)."""
    genus = spec.genus
    left = monomial_basis(genus, bound_a)
    right = monomial_basis(genus, bound_b)
    index = {monomial: k for k, monomial in enumerate(monomial_basis(genus, bound_a + bound_b))}
    tensor = np.zeros((len(left), len(right), len(index)), dtype=field.dtype)
    for a, (i, e) in enumerate(left):
        for b, (j, e2) in enumerate(right):
            if e + e2 < 2:
                tensor[a, b, index[(i + j, e + e2)]] = 1
                continue
            for k, c in enumerate(spec.f_coeffs):
                if c:
                    tensor[a, b, index[(i + j + k, 0)]] = c
    tensor.flags.writeable = False
    return tensor


@lru_cache(maxsize=32)
def pole_table(spec: HyperellipticSpec, bound_a: int, bound_b: int) -> MulTable:
    """The multiplication table between arbitrary pole bounds at P∞ (a frame whose basepoint is P∞ itself)."""
    field = PrimeField(spec.p)
    return MulTable(bound_a, bound_b, multiplication_tensor(spec, field, bound_a, bound_b))


def infinity_subspace(field: PrimeField, genus: int, bound: int, order: int) -> Subspace:
    """H⁰(bound·P∞ − order·P∞) inside H⁰(bound·P∞): the leading basis monomials of pole order ≤ bound − order."""
    count = sum(1 for monomial in monomial_basis(genus, bound) if pole_order(monomial, genus) <= bound - order)
    ambient = len(monomial_basis(genus, bound))
    return Subspace.span(field, np.eye(ambient, dtype=field.dtype)[:count], ambient)


def evaluation_row(spec: HyperellipticSpec, genus: int, bound: int, point: Tuple[int, int]) -> List[int]:
    """Values of the basis monomials of H⁰(bound·P∞) at an affine point."""
    x0, y0 = point
    return [pow(x0, i, spec.p) * pow(y0, e, spec.p) % spec.p for i, e in monomial_basis(genus, bound)]


def build_hyperelliptic(spec: HyperellipticSpec, kind: ModelKind) -> CurveModel:
    """
    Build the coordinatized model of y² = f(x) for the given kind with D₀ = d₀·P∞.

    Args:
        spec (HyperellipticSpec): The curve.
        kind (ModelKind): LARGE and MEDIUM use d₀ = 2g+1, SMALL uses d₀ = g+1.

    Returns:
        CurveModel: Dimensions, the required and Riemann–Roch tables, and W_{D₀}.
    """
    genus = spec.genus
    d0 = kind.basepoint_degree(genus)
    field = PrimeField(spec.p)
    pairs = tuple(kind.required_tables) + tuple(kind.riemann_roch_tables)
    multiples = {kind.ambient_multiple}
    for m, n in pairs:
        multiples.update((m, n, m + n))
    h0_dims = {m: len(monomial_basis(genus, m * d0)) for m in sorted(multiples)}
    tables = {(m, n): MulTable(m, n, multiplication_tensor(spec, field, m * d0, n * d0)) for m, n in pairs}
    n_bound = kind.ambient_multiple * d0
    w_d0 = infinity_subspace(field, genus, n_bound, d0)
    logger.info(
        "Built %s model: p=%d g=%d d0=%d N=%d dim V=%d tables=%s",
        kind.value,
        spec.p,
        genus,
        d0,
        n_bound,
        h0_dims[kind.ambient_multiple],
        sorted(tables),
    )
    return CurveModel(field, genus, d0, kind, h0_dims, tables, w_d0, spec.f_coeffs)


def spec_of(c: CurveModel) -> HyperellipticSpec:
    """The equation a model was built from."""
    if c.f_coeffs is None:
        raise NotHyperellipticError("The curve model does not record a hyperelliptic equation.")
    return HyperellipticSpec(c.field.modulus, c.f_coeffs)


def iter_rational_points(spec: HyperellipticSpec) -> Iterator[Tuple[int, int]]:
    """Affine GF(p)-points in order of x, with y and p−y both listed when y ≠ 0."""
    field = PrimeField(spec.p)
    for x0 in range(spec.p):
        root = field.sqrt(spec.evaluate(x0))
        if root is None:
            continue
        y0 = min(root, spec.p - root) if root else 0
        yield x0, y0
        if y0:
            yield x0, spec.p - y0


def random_rational_point(spec: HyperellipticSpec, rng: np.random.Generator) -> Tuple[int, int]:
    """A random affine GF(p)-point: random x until f(x) is a square, then a random sign for y."""
    field = PrimeField(spec.p)
    while True:
        x0 = int(rng.integers(0, spec.p))
        root = field.sqrt(spec.evaluate(x0))
        if root is None:
            continue
        if root and rng.integers(0, 2):
            root = spec.p - root
        return x0, root


def default_spec(genus: int, p: int, linear: int = 3) -> HyperellipticSpec:
    """The first squarefree f = x^(2g+1) + linear·x + c with c = 1, 2, …"""
    for constant in range(1, p):
        coeffs = [0] * (2 * genus + 2)
        coeffs[0], coeffs[1], coeffs[-1] = constant, linear % p, 1
        try:
            return HyperellipticSpec(p, tuple(coeffs))
        except SingularCurveError:
            logger.debug("x^%d + %dx + %d is singular mod %d", 2 * genus + 1, linear, constant, p)
    raise SingularCurveError(f"No squarefree x^{2 * genus + 1} + {linear}x + c exists mod {p}.")


def random_points(
    spec: HyperellipticSpec, count: int, rng: np.random.Generator, distinct_x: bool = False
) -> List[Tuple[int, int]]:
    """count distinct random rational points, optionally with pairwise distinct x coordinates."""
    seen = set()
    points = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 1000 * (count + 1):
            logger.error("Gave up sampling %d rational points over GF(%d)", count, spec.p)
            raise ValueError(f"Could not find {count} distinct rational points over GF({spec.p}).")
        point = random_rational_point(spec, rng)
        key = point[0] if distinct_x else point
        if key in seen:
            continue
        seen.add(key)
        points.append(point)
    return points
