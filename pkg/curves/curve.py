"""Coordinatized curve data: dimensions of H⁰(mD₀) and the multiplication tables consumed by every algorithm."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from arithmetic.field import PrimeField
from arithmetic.linalg import Subspace

logger = logging.getLogger(__name__)


class MissingTableError(LookupError):
    """Raised when an algorithm needs a multiplication table the curve does not carry."""


class NonspecialRangeError(ValueError):
    """Raised when Riemann–Roch is asked about a multiple outside the nonspecial range."""


class ModelKind(str, Enum):
    """The three parameter regimes for the ambient bundle L and the basepoint D₀."""

    LARGE = "large"
    MEDIUM = "medium"
    SMALL = "small"

    @property
    def ambient_multiple(self) -> int:
        """L = ambient_multiple · D₀."""
        return 2 if self is ModelKind.MEDIUM else 3

    def basepoint_degree(self, genus: int) -> int:
        return genus + 1 if self is ModelKind.SMALL else 2 * genus + 1

    @property
    def required_tables(self) -> Tuple[Tuple[int, int], ...]:
        return _REQUIRED_TABLES[self]

    @property
    def riemann_roch_tables(self) -> Tuple[Tuple[int, int], ...]:
        """mul′ : H⁰(L) ⊗ H⁰(2L) → H⁰(3L); the small model admits no Riemann–Roch degrees."""
        m = self.ambient_multiple
        return () if self is ModelKind.SMALL else ((m, 2 * m),)


_REQUIRED_TABLES = {
    ModelKind.LARGE: ((3, 3), (2, 1), (3, 2)),
    ModelKind.MEDIUM: ((2, 2), (3, 1), (3, 2), (2, 3), (2, 1)),
    ModelKind.SMALL: ((3, 3), (4, 3), (2, 3), (2, 4), (3, 4), (2, 2), (3, 1)),
}


@dataclass(frozen=True, eq=False)
class MulTable:
    """
    mul_{mn} : H⁰(mD₀) ⊗ H⁰(nD₀) → H⁰((m+n)D₀).

    tensor[i, j] holds the coordinates of t_i · t_j in the basis of H⁰((m+n)D₀). The indices m and n count
    multiples of the basepoint of whatever frame built the table.
    """

    m: int
    n: int
    tensor: np.ndarray

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.tensor.shape

    def transposed(self) -> "MulTable":
        return MulTable(self.n, self.m, self.tensor.transpose(1, 0, 2))


@dataclass(frozen=True, eq=False)
class CurveModel:
    """Everything the algorithms know about a curve: field, genus, basepoint degree, model kind, dims and tables."""

    field: PrimeField
    genus: int
    d0: int
    kind: ModelKind
    h0_dims: Mapping[int, int]
    tables: Mapping[Tuple[int, int], MulTable]
    w_d0: Subspace
    f_coeffs: Optional[Tuple[int, ...]] = None

    @property
    def ambient_m(self) -> int:
        return self.kind.ambient_multiple

    @property
    def degree(self) -> int:
        """N = deg L."""
        return self.ambient_m * self.d0

    @property
    def dim_v(self) -> int:
        return self.h0(self.ambient_m)

    def h0(self, m: int) -> int:
        """Stored dimension of H⁰(mD₀)."""
        if m not in self.h0_dims:
            raise MissingTableError(f"The curve carries no coordinates for H⁰({m}D₀).")
        return self.h0_dims[m]

    def has_table(self, m: int, n: int) -> bool:
        return (m, n) in self.tables or (n, m) in self.tables

    def table(self, m: int, n: int) -> MulTable:
        """The table oriented as (m, n), transposing a stored (n, m) table when needed."""
        if (m, n) in self.tables:
            return self.tables[(m, n)]
        if (n, m) in self.tables:
            return self.tables[(n, m)].transposed()
        logger.error("Missing multiplication table (%d,%d) on %s model", m, n, self.kind.value)
        raise MissingTableError(f"Missing multiplication table ({m},{n}) on the {self.kind.value} model.")

    def full_space(self, m: int) -> Subspace:
        return Subspace.full(self.field, self.h0(m))

    def same_curve(self, other: "CurveModel") -> bool:
        """True when both models come from the same recorded equation over the same field."""
        return self.field == other.field and self.f_coeffs is not None and self.f_coeffs == other.f_coeffs

    def describe(self) -> Dict[str, int]:
        return {"genus": self.genus, "d0": self.d0, "N": self.degree, "dim_v": self.dim_v}


def h0_dim(c: CurveModel, m: int) -> int:
    """
    dim H⁰(mD₀) by Riemann–Roch.

    Args:
        c (CurveModel): The curve.
        m (int): Multiple of the basepoint.

    Returns:
        int: m·d₀ + 1 − g.
    """
    if m * c.d0 < 2 * c.genus - 1:
        raise NonspecialRangeError(f"{m}·{c.d0} is below the nonspecial range 2g−1 = {2 * c.genus - 1}.")
    return m * c.d0 + 1 - c.genus
