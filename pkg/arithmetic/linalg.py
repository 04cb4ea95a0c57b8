"""
Exact linear algebra over GF(p).

Matrices are numpy arrays of canonical representatives. Subspaces are stored in reduced row echelon form with zero
rows dropped, so equality of subspaces is equality of arrays.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from arithmetic.field import INT64_SAFE_TERMS, PrimeField

logger = logging.getLogger(__name__)


class AmbientMismatchError(ValueError):
    """Raised when subspaces of different ambient spaces are combined."""


def as_array(field: PrimeField, values, cols: int = None) -> np.ndarray:
    """
    Convert values to a 2-D array of canonical representatives in the field's dtype.

    Args:
        field (PrimeField): The field.
        values: Nested sequence or array of integers.
        cols (int): Column count, needed when values is empty.

    Returns:
        np.ndarray: The reduced array.
    """
    array = np.asarray(values)
    if array.size == 0:
        return np.zeros((0, cols if cols is not None else (array.shape[-1] if array.ndim == 2 else 0)), field.dtype)
    if array.ndim == 1:
        array = array.reshape(1, -1)
    return array.astype(field.dtype) % field.modulus


def contract(field: PrimeField, left: np.ndarray, right: np.ndarray, axes) -> np.ndarray:
    """
    Tensor contraction mod p, charging one multiplication and one addition per accumulated term.

    Args:
        field (PrimeField): The field whose counter is charged.
        left (np.ndarray): First operand.
        right (np.ndarray): Second operand.
        axes: Pair of axis lists, as for numpy.tensordot.

    Returns:
        np.ndarray: The reduced contraction.
    """
    left_axes, right_axes = axes
    terms = 1
    for axis in left_axes:
        terms *= left.shape[axis]
    if not field.uses_objects and terms > INT64_SAFE_TERMS:
        left, right = left.astype(object), right.astype(object)
    result = np.tensordot(left, right, axes=axes) % field.modulus
    field.charge(result.size * max(2 * terms - 1, 0))
    return result.astype(field.dtype, copy=False)


def _row_reduce(field: PrimeField, entries: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Gauss-Jordan elimination with first-nonzero pivoting; returns the nonzero RREF rows and pivot columns."""
    p = field.modulus
    work = np.array(entries, dtype=field.dtype, copy=True) % p
    n_rows, n_cols = work.shape
    pivots = []
    row = 0
    ops = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        candidates = np.flatnonzero(work[row:, col])
        if candidates.size == 0:
            continue
        lead = row + int(candidates[0])
        if lead != row:
            work[[row, lead]] = work[[lead, row]]
        inverse = pow(int(work[row, col]), -1, p)
        work[row, col:] = work[row, col:] * inverse % p
        ops += 1 + (n_cols - col)
        factors = work[:, col].copy()
        factors[row] = 0
        others = np.flatnonzero(factors)
        if others.size:
            work[others, col:] = (work[others, col:] - np.outer(factors[others], work[row, col:])) % p
            ops += 2 * others.size * (n_cols - col)
        pivots.append(col)
        row += 1
    field.charge(ops)
    return work[:row], tuple(pivots)


def _null_space(field: PrimeField, reduced: np.ndarray, pivots: Sequence[int], n_cols: int) -> np.ndarray:
    """Spanning vectors of the kernel of an RREF matrix, one per free column (not themselves in RREF)."""
    pivot_set = set(pivots)
    free = [col for col in range(n_cols) if col not in pivot_set]
    basis = np.zeros((len(free), n_cols), dtype=field.dtype)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, list(pivots)] = (-reduced[:, free].T) % field.modulus
            field.charge(len(free) * len(pivots))
    return basis


@dataclass(frozen=True, eq=False)
class Matrix:
    """A dense matrix over GF(p)."""

    field: PrimeField
    entries: np.ndarray

    @classmethod
    def from_rows(cls, field: PrimeField, rows, cols: int = None) -> "Matrix":
        return cls(field, as_array(field, rows, cols))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def to_rows(self) -> list:
        return [[int(v) for v in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.entries.shape == self.entries.shape
            and bool(np.array_equal(other.entries, self.entries))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.entries.shape, tuple(int(v) for v in self.entries.flat)))


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of GF(p)^ambient_dim, stored as its RREF basis with zero rows dropped."""

    field: PrimeField
    ambient_dim: int
    basis: np.ndarray
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, field: PrimeField, vectors, ambient_dim: int) -> "Subspace":
        """The span of the given vectors, canonicalized."""
        array = as_array(field, vectors, ambient_dim)
        if array.shape[1] != ambient_dim:
            raise AmbientMismatchError(f"Vectors of length {array.shape[1]} in an ambient of dimension {ambient_dim}.")
        reduced, pivots = _row_reduce(field, array)
        reduced.flags.writeable = False
        return cls(field, ambient_dim, reduced, pivots)

    @classmethod
    def full(cls, field: PrimeField, ambient_dim: int) -> "Subspace":
        basis = np.eye(ambient_dim, dtype=field.dtype)
        basis.flags.writeable = False
        return cls(field, ambient_dim, basis, tuple(range(ambient_dim)))

    @classmethod
    def zero(cls, field: PrimeField, ambient_dim: int) -> "Subspace":
        basis = np.zeros((0, ambient_dim), dtype=field.dtype)
        basis.flags.writeable = False
        return cls(field, ambient_dim, basis, ())

    @classmethod
    def random(cls, field: PrimeField, ambient_dim: int, dim: int, rng: np.random.Generator) -> "Subspace":
        """A random subspace of exactly the given dimension."""
        while True:
            vectors = rng.integers(0, field.modulus, size=(dim, ambient_dim))
            candidate = cls.span(field, vectors, ambient_dim)
            if candidate.dim == dim:
                return candidate

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def annihilator(self) -> np.ndarray:
        """A matrix whose kernel is this subspace (one row per codimension)."""
        if self.is_zero:
            return np.eye(self.ambient_dim, dtype=self.field.dtype)
        return _null_space(self.field, self.basis, self.pivots, self.ambient_dim)

    def first_vector(self) -> np.ndarray:
        if self.is_zero:
            raise ValueError("The zero subspace has no nonzero vector.")
        return self.basis[0].copy()

    def random_vector(self, rng: np.random.Generator) -> np.ndarray:
        """A uniformly random nonzero vector of the subspace."""
        if self.is_zero:
            raise ValueError("The zero subspace has no nonzero vector.")
        while True:
            coefficients = as_array(self.field, rng.integers(0, self.field.modulus, size=self.dim))
            vector = contract(self.field, coefficients[0], self.basis, ([0], [0]))
            if vector.any():
                return vector

    def contains_vector(self, vector) -> bool:
        return contains(self, Subspace.span(self.field, [vector], self.ambient_dim))

    def to_rows(self) -> list:
        return [[int(v) for v in row] for row in self.basis]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace) or other.field != self.field or other.ambient_dim != self.ambient_dim:
            return False
        return equal(self, other)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, tuple(int(v) for v in self.basis.flat)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, p={self.field.modulus})"


def _require_same_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        logger.error("Ambient mismatch: %r vs %r", a, b)
        raise AmbientMismatchError(f"Ambient mismatch: {a!r} vs {b!r}.")


def rref(m: Matrix) -> Matrix:
    """The reduced row echelon form of m, same shape, zero rows at the bottom."""
    reduced, _ = _row_reduce(m.field, m.entries)
    padded = np.zeros(m.entries.shape, dtype=m.field.dtype)
    padded[: reduced.shape[0]] = reduced
    return Matrix(m.field, padded)


def kernel_of(field: PrimeField, entries: np.ndarray, cols: int) -> Subspace:
    """The subspace {x : entries · x = 0} of GF(p)^cols."""
    array = as_array(field, entries, cols)
    reduced, pivots = _row_reduce(field, array)
    return Subspace.span(field, _null_space(field, reduced, pivots, cols), cols)


def kernel(m: Matrix) -> Subspace:
    """The right kernel {x : m · xᵀ = 0}."""
    return kernel_of(m.field, m.entries, m.cols)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b, as the kernel of the stacked annihilators."""
    _require_same_ambient(a, b)
    if a.is_full:
        return b
    if b.is_full:
        return a
    stacked = np.vstack([a.annihilator(), b.annihilator()])
    return kernel_of(a.field, stacked, a.ambient_dim)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """a + b."""
    _require_same_ambient(a, b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    return Subspace.span(a.field, np.vstack([a.basis, b.basis]), a.ambient_dim)


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff b ⊂ a: every basis row of b reduces to zero against a."""
    _require_same_ambient(a, b)
    if b.is_zero:
        return True
    if a.is_zero:
        return False
    p = a.field.modulus
    residue = b.basis.copy()
    ops = 0
    for row, col in enumerate(a.pivots):
        factors = residue[:, col].copy()
        hits = np.flatnonzero(factors)
        if hits.size:
            residue[hits] = (residue[hits] - np.outer(factors[hits], a.basis[row])) % p
            ops += 2 * hits.size * a.ambient_dim
    a.field.charge(ops)
    return not residue.any()


def equal(a: Subspace, b: Subspace) -> bool:
    """Canonical-form equality."""
    _require_same_ambient(a, b)
    return a.basis.shape == b.basis.shape and bool(np.array_equal(a.basis, b.basis))

