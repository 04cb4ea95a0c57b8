"""
Effective divisors as section spaces.

An effective divisor D of degree d is carried by W_D = H⁰(mD₀ − D) inside the coordinatized H⁰(mD₀). Everything
below is multiplication through the curve's tables, division (a single stacked kernel) and subspace lattice
operations.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from arithmetic.linalg import AmbientMismatchError, Subspace, contains, contract, intersect, kernel_of, subspace_sum
from curves.curve import CurveModel, MulTable

logger = logging.getLogger(__name__)

RANDOM_SPAN_ATTEMPTS = 3


class DegreeRangeError(ValueError):
    """Raised when a divisor degree is outside the range an algorithm needs."""


class DegreeMismatchError(ValueError):
    """Raised when a subspace's codimension disagrees with its claimed divisor degree."""


class ZeroSpaceError(ValueError):
    """Raised when an algorithm needs a nonzero section of a zero space."""


class SectionChoice(str, Enum):
    DETERMINISTIC = "deterministic"
    RANDOM = "random"


@dataclass(frozen=True, eq=False)
class DivisorRep:
    """W_D = H⁰(ambient_m·D₀ − D) for an effective divisor D of the given degree."""

    curve: CurveModel
    ambient_m: int
    degree: int
    w: Subspace

    def __post_init__(self):
        expected = self.curve.h0(self.ambient_m)
        if self.w.ambient_dim != expected:
            raise AmbientMismatchError(
                f"Subspace of dimension {self.w.ambient_dim} given for H⁰({self.ambient_m}D₀) of dimension {expected}."
            )
        if self.degree < 0:
            raise DegreeRangeError(f"Negative divisor degree {self.degree}.")
        if self.degree <= self.bound - 2 * self.curve.genus + 1 and self.w.codim != self.degree:
            logger.error("Codimension %d does not match degree %d", self.w.codim, self.degree)
            raise DegreeMismatchError(f"Codimension {self.w.codim} does not match the divisor degree {self.degree}.")

    @classmethod
    def empty(cls, curve: CurveModel, m: int) -> "DivisorRep":
        """The empty divisor: all of H⁰(mD₀)."""
        return cls(curve, m, 0, curve.full_space(m))

    @property
    def bound(self) -> int:
        """Degree of the ambient bundle, m·d₀."""
        return self.ambient_m * self.curve.d0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DivisorRep)
            and other.ambient_m == self.ambient_m
            and other.degree == self.degree
            and other.w == self.w
        )

    def __hash__(self) -> int:
        return hash((self.ambient_m, self.degree, self.w))

    def __repr__(self) -> str:
        return f"DivisorRep(m={self.ambient_m}, degree={self.degree}, dim={self.w.dim})"


def require_on_curve(c: CurveModel, d: DivisorRep):
    """Raise AmbientMismatchError unless d lives on the model c (or an identical rebuild of it)."""
    if d.curve is c or (c.same_curve(d.curve) and c.kind == d.curve.kind and c.d0 == d.curve.d0):
        return
    logger.error("Divisor on a %s model used with a %s model", d.curve.kind.value, c.kind.value)
    raise AmbientMismatchError("Divisors live on different curve models.")


def _require_compatible(a: DivisorRep, b: DivisorRep, same_ambient: bool = True):
    require_on_curve(a.curve, b)
    if same_ambient and a.ambient_m != b.ambient_m:
        raise AmbientMismatchError(f"Divisors live in H⁰({a.ambient_m}D₀) and H⁰({b.ambient_m}D₀).")


def _require_degree(condition: bool, message: str):
    if not condition:
        logger.error("Degree precondition failed: %s", message)
        raise DegreeRangeError(message)


def choose_section(
    w: Subspace, choice: SectionChoice = SectionChoice.DETERMINISTIC, rng: Optional[np.random.Generator] = None
) -> np.ndarray:
    """A nonzero vector of w: the first RREF row, or a random one."""
    if w.is_zero:
        logger.error("Asked for a section of a zero space of ambient dimension %d", w.ambient_dim)
        raise ZeroSpaceError("The space has no nonzero section.")
    if choice is SectionChoice.RANDOM:
        return w.random_vector(rng if rng is not None else np.random.default_rng())
    return w.first_vector()


# Table-level kernels


def multiply_spaces(table: MulTable, a: Subspace, b: Subspace) -> Subspace:
    """
    span{s·t : s ∈ a, t ∈ b} in H⁰((m+n)D₀).

    Products are staged: first every basis row of a against the whole table, then against the basis of b, so the
    work stays within a constant times dim⁴ field operations.

    Args:
        table (MulTable): mul_{mn}.
        a (Subspace): Subspace of H⁰(mD₀).
        b (Subspace): Subspace of H⁰(nD₀).

    Returns:
        Subspace: The image, canonicalized.
    """
    field = a.field
    rows, cols, out = table.shape
    if a.ambient_dim != rows or b.ambient_dim != cols:
        raise AmbientMismatchError(f"Table of shape {table.shape} given dims {a.ambient_dim}, {b.ambient_dim}.")
    if a.is_zero or b.is_zero:
        return Subspace.zero(field, out)
    if a.is_full and not b.is_full:
        return multiply_spaces(table.transposed(), b, a)
    staged = table.tensor if a.is_full else contract(field, a.basis, table.tensor, ([1], [0]))
    if b.is_full:
        products = staged.reshape(-1, out)
    else:
        # staged[i, j, r] with b.basis[k, j] → products[i, r, k]
        products = contract(field, staged, b.basis, ([1], [1])).transpose(0, 2, 1).reshape(-1, out)
    return Subspace.span(field, products, out)


def multiply_section(table: MulTable, section: np.ndarray, b: Subspace) -> Subspace:
    """section · b, the image of a single section."""
    line = Subspace.span(b.field, [section], table.shape[0])
    return multiply_spaces(table, line, b)


def divide_spaces(table: MulTable, target: Subspace, divisor_space: Subspace) -> Subspace:
    """
    {s ∈ H⁰(mD₀) : s·t ∈ target for every t in divisor_space}, as one stacked kernel.

    The target is replaced by its annihilator (coordinates on a complement), each basis section of divisor_space
    contributes codim(target) linear conditions on s, and the whole system is solved at once.

    Args:
        table (MulTable): mul_{mn}.
        target (Subspace): Subspace of H⁰((m+n)D₀).
        divisor_space (Subspace): Subspace of H⁰(nD₀), base-point-free for the result to be exact.

    Returns:
        Subspace: Subspace of H⁰(mD₀).
    """
    field = target.field
    dm, dn, do = table.shape
    if target.ambient_dim != do or divisor_space.ambient_dim != dn:
        raise AmbientMismatchError(
            f"Table of shape {table.shape} given target dim {target.ambient_dim}, divisor {divisor_space.ambient_dim}."
        )
    if target.is_full or divisor_space.is_zero:
        return Subspace.full(field, dm)
    annihilator = target.annihilator()
    c = annihilator.shape[0]
    if divisor_space.is_full:
        images = contract(field, table.tensor, annihilator, ([2], [1]))
    else:
        k = divisor_space.dim
        cost_sections_first = dm * do * k * (dn + c)
        cost_annihilator_first = dm * dn * c * (do + k)
        if cost_sections_first <= cost_annihilator_first:
            staged = contract(field, table.tensor, divisor_space.basis, ([1], [1]))
            images = contract(field, staged, annihilator, ([1], [1]))
        else:
            staged = contract(field, table.tensor, annihilator, ([2], [1]))
            images = contract(field, staged, divisor_space.basis, ([1], [1]))
    system = images.reshape(dm, -1).T
    return kernel_of(field, system, dm)


# Divisor-level operations


def mul_image(
    a: DivisorRep, b: DivisorRep, randomized: bool = False, rng: Optional[np.random.Generator] = None
) -> DivisorRep:
    """
    W_{D+E} in H⁰((m+n)D₀) as the image of W_D ⊗ W_E.

    Args:
        a (DivisorRep): D in H⁰(mD₀).
        b (DivisorRep): E in H⁰(nD₀).
        randomized (bool): Span the image from about 2·dim random products, checking the dimension.
        rng (Optional[np.random.Generator]): Source for the randomized mode.

    Returns:
        DivisorRep: D + E in H⁰((m+n)D₀).
    """
    _require_compatible(a, b, same_ambient=False)
    c = a.curve
    for rep in (a, b):
        _require_degree(
            rep.bound - rep.degree >= 2 * c.genus + 1,
            f"mul_image needs m·d₀ − deg ≥ 2g+1, got {rep.bound} − {rep.degree} with g = {c.genus}",
        )
    table = c.table(a.ambient_m, b.ambient_m)
    m = a.ambient_m + b.ambient_m
    degree = a.degree + b.degree
    if randomized and not a.w.is_zero and not b.w.is_zero:
        expected = m * c.d0 - degree + 1 - c.genus
        rng = rng if rng is not None else np.random.default_rng()
        for attempt in range(RANDOM_SPAN_ATTEMPTS):
            products = []
            for _ in range(2 * expected):
                left = contract(c.field, a.w.random_vector(rng), table.tensor, ([0], [0]))
                products.append(contract(c.field, b.w.random_vector(rng), left, ([0], [0])))
            w = Subspace.span(c.field, products, table.shape[2])
            if w.dim == expected:
                return DivisorRep(c, m, degree, w)
            logger.debug("Random span attempt %d reached dim %d of %d", attempt + 1, w.dim, expected)
        logger.debug("Random spanning fell back to the deterministic product")
    return DivisorRep(c, m, degree, multiply_spaces(table, a.w, b.w))


def divide(target: DivisorRep, divisor: DivisorRep, m: int) -> DivisorRep:
    """
    {s ∈ H⁰(mD₀) : s·W_E ⊂ target}, the divisor target − E in H⁰(mD₀).

    The divisor space must be base-point-free, which holds when n·d₀ − deg E ≥ 2g.
    """
    _require_compatible(target, divisor, same_ambient=False)
    c = target.curve
    n = divisor.ambient_m
    if target.ambient_m != m + n:
        raise AmbientMismatchError(f"Dividing H⁰({target.ambient_m}D₀) by H⁰({n}D₀) cannot land in H⁰({m}D₀).")
    _require_degree(
        divisor.bound - divisor.degree >= 2 * c.genus,
        f"divide needs a base-point-free divisor space: {divisor.bound} − {divisor.degree} < 2g = {2 * c.genus}",
    )
    _require_degree(target.degree >= divisor.degree, f"Cannot remove degree {divisor.degree} from {target.degree}")
    w = divide_spaces(c.table(m, n), target.w, divisor.w)
    return DivisorRep(c, m, target.degree - divisor.degree, w)


def union_divisor(a: DivisorRep, b: DivisorRep) -> DivisorRep:
    """D ∪ E from W_D ∩ W_E."""
    _require_compatible(a, b)
    _require_degree(a.degree + b.degree <= a.bound - 2 * a.curve.genus, "union needs deg D + deg E ≤ N − 2g")
    w = intersect(a.w, b.w)
    return DivisorRep(a.curve, a.ambient_m, w.codim, w)


def intersect_divisor(a: DivisorRep, b: DivisorRep) -> DivisorRep:
    """D ∩ E from W_D + W_E."""
    _require_compatible(a, b)
    _require_degree(a.degree + b.degree <= a.bound - 2 * a.curve.genus, "intersection needs deg D + deg E ≤ N − 2g")
    w = subspace_sum(a.w, b.w)
    return DivisorRep(a.curve, a.ambient_m, w.codim, w)


def disjoint(a: DivisorRep, b: DivisorRep) -> bool:
    """True iff W_D + W_E is the whole space."""
    _require_compatible(a, b)
    _require_degree(a.degree + b.degree <= a.bound - 2 * a.curve.genus, "disjointness needs deg D + deg E ≤ N − 2g")
    return subspace_sum(a.w, b.w).is_full


def included(a: DivisorRep, b: DivisorRep) -> bool:
    """True iff D ⊂ E, tested as W_E ⊂ W_D."""
    _require_compatible(a, b)
    limit = a.bound - 2 * a.curve.genus
    _require_degree(a.degree <= limit and b.degree <= limit, "inclusion needs deg D, deg E ≤ N − 2g")
    return contains(a.w, b.w)


def _fast_union(a: DivisorRep, b: DivisorRep) -> Optional[DivisorRep]:
    """W_D ∩ W_E when D and E are disjoint, in which case it equals W_{D+E}."""
    if a.degree + b.degree > a.bound - 2 * a.curve.genus:
        return None
    w = intersect(a.w, b.w)
    if w.codim == a.degree + b.degree:
        logger.debug("Intersection fast path hit for degrees %d + %d", a.degree, b.degree)
        return DivisorRep(a.curve, a.ambient_m, a.degree + b.degree, w)
    logger.debug("Intersection fast path missed: codim %d for degrees %d + %d", w.codim, a.degree, b.degree)
    return None


def add_v1(a: DivisorRep, b: DivisorRep) -> DivisorRep:
    """W_{D+E}: multiply W_D ⊗ W_E into H⁰(2L), then divide by all of H⁰(L)."""
    _require_compatible(a, b)
    limit = a.bound - 2 * a.curve.genus - 1
    _require_degree(a.degree <= limit and b.degree <= limit, f"add_v1 needs deg D, deg E ≤ N − 2g − 1 = {limit}")
    product = mul_image(a, b)
    return divide(product, DivisorRep.empty(a.curve, a.ambient_m), a.ambient_m)


def _flip_with(d: DivisorRep, section: np.ndarray) -> Tuple[DivisorRep, Subspace]:
    """W_{D′} for (f) = D + D′, together with f·V."""
    c = d.curve
    m = d.ambient_m
    table = c.table(m, m)
    image = multiply_section(table, section, c.full_space(m))
    w = divide_spaces(table, image, d.w)
    return DivisorRep(c, m, d.bound - d.degree, w), image


def flip(
    d: DivisorRep, choice: SectionChoice = SectionChoice.DETERMINISTIC, rng: Optional[np.random.Generator] = None
) -> DivisorRep:
    """
    Flip D to D′ with D + D′ = (f) for a nonzero f ∈ W_D.

    Args:
        d (DivisorRep): D with deg D ≤ N − 2g.
        choice (SectionChoice): How f is picked.
        rng (Optional[np.random.Generator]): Source for random choice.

    Returns:
        DivisorRep: D′, of degree N − deg D.
    """
    _require_degree(d.degree <= d.bound - 2 * d.curve.genus, f"flip needs deg D ≤ N − 2g, got {d.degree}")
    flipped, _ = _flip_with(d, choose_section(d.w, choice, rng))
    return flipped


def add_v2(
    a: DivisorRep,
    b: DivisorRep,
    fast_path: bool = True,
    choice: SectionChoice = SectionChoice.DETERMINISTIC,
    rng: Optional[np.random.Generator] = None,
) -> DivisorRep:
    """
    W_{D+E} through a flip of D: with (f) = D + D′, f·W_E = H⁰(2L − D − D′ − E), and dividing by W_{D′} leaves
    H⁰(L − D − E). No condition on deg E.
    """
    _require_compatible(a, b)
    c = a.curve
    _require_degree(
        2 * c.genus <= a.degree <= a.bound - 2 * c.genus, f"add_v2 needs 2g ≤ deg D ≤ N − 2g, got {a.degree}"
    )
    if fast_path:
        union = _fast_union(a, b)
        if union is not None:
            return union
    section = choose_section(a.w, choice, rng)
    flipped, _ = _flip_with(a, section)
    m = a.ambient_m
    target = DivisorRep(c, 2 * m, a.bound + b.degree, multiply_section(c.table(m, m), section, b.w))
    return divide(target, flipped, m)


def add_divisors(a: DivisorRep, b: DivisorRep, fast_path: bool = True) -> DivisorRep:
    """D + E: the intersection fast path, then add_v1 when both degrees allow it, otherwise add_v2."""
    _require_compatible(a, b)
    c = a.curve
    if fast_path:
        union = _fast_union(a, b)
        if union is not None:
            return union
    limit = a.bound - 2 * c.genus
    if a.degree <= limit - 1 and b.degree <= limit - 1:
        return add_v1(a, b)
    if 2 * c.genus <= a.degree <= limit:
        return add_v2(a, b, fast_path=False)
    if 2 * c.genus <= b.degree <= limit:
        return add_v2(b, a, fast_path=False)
    raise DegreeRangeError(f"No addition method covers degrees {a.degree} and {b.degree} with N = {a.bound}.")


def set_subtract(d: DivisorRep, e: DivisorRep) -> DivisorRep:
    """W_{E∖D}: H⁰(2L − E) = W_E·V, then divide by W_D."""
    _require_compatible(d, e)
    c = d.curve
    _require_degree(d.degree <= d.bound - 2 * c.genus, "set subtraction needs deg D ≤ N − 2g")
    _require_degree(e.degree <= e.bound - 2 * c.genus - 1, "set subtraction needs deg E ≤ N − 2g − 1")
    m = d.ambient_m
    target = mul_image(e, DivisorRep.empty(c, m))
    w = divide_spaces(c.table(m, m), target.w, d.w)
    return DivisorRep(c, m, w.codim, w)


def membership(
    curve: CurveModel,
    w: Subspace,
    d: int,
    m: Optional[int] = None,
    choice: SectionChoice = SectionChoice.DETERMINISTIC,
    rng: Optional[np.random.Generator] = None,
) -> bool:
    """
    Decide whether a codimension-d subspace of H⁰(mD₀) is W_D for some effective D.

    With f ∈ w, W′ = {s : s·w ⊂ f·V} has codimension N − d exactly when w comes from a divisor.

    Args:
        curve (CurveModel): The curve.
        w (Subspace): Candidate subspace.
        d (int): Its claimed degree, 2g ≤ d ≤ N − 2g.
        m (Optional[int]): Ambient multiple, the curve's own by default.
        choice (SectionChoice): How f is picked.
        rng (Optional[np.random.Generator]): Source for random choice.

    Returns:
        bool: Whether w is a divisor space.
    """
    m = curve.ambient_m if m is None else m
    n_bound = m * curve.d0
    _require_degree(2 * curve.genus <= d <= n_bound - 2 * curve.genus, f"membership needs 2g ≤ d ≤ N − 2g, got {d}")
    if w.is_zero:
        raise ZeroSpaceError("The zero subspace is never a divisor space in range.")
    if w.codim != d:
        logger.error("Membership asked about codim %d with degree %d", w.codim, d)
        raise DegreeMismatchError(f"Subspace codimension {w.codim} differs from the degree {d}.")
    table = curve.table(m, m)
    image = multiply_section(table, choose_section(w, choice, rng), curve.full_space(m))
    flipped = divide_spaces(table, image, w)
    logger.debug("Membership: codim W′ = %d, accepting codim %d", flipped.codim, n_bound - d)
    return flipped.codim == n_bound - d
