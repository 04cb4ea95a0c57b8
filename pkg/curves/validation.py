"""Consistency checks for coordinatized curve models."""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional

import numpy as np

from arithmetic.linalg import Subspace, contract
from curves.curve import CurveModel, MulTable, NonspecialRangeError, h0_dim
from curves.hyperelliptic import multiplication_tensor, spec_of

logger = logging.getLogger(__name__)

ASSOCIATIVITY_SAMPLES = 8


@dataclass
class ValidationReport:
    """Itemized result of validate(); each failure names the offending check and table."""

    failures: List[str] = field(default_factory=list)
    checked_tables: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        logger.warning("Curve validation failure: %s", message)
        self.failures.append(message)


def table_image(c: CurveModel, table: MulTable) -> Subspace:
    """The span of all products t_i · t_j stored in a table."""
    flat = table.tensor.reshape(-1, table.shape[2])
    return Subspace.span(c.field, flat, table.shape[2])


def _check_dimensions(c: CurveModel, report: ValidationReport):
    for m, dim in sorted(c.h0_dims.items()):
        try:
            expected = h0_dim(c, m)
        except NonspecialRangeError:
            continue
        if dim != expected:
            report.fail(f"dim H⁰({m}D₀) = {dim}, expected {expected}")
    if c.w_d0.ambient_dim != c.dim_v:
        report.fail(f"W_D₀ lives in dimension {c.w_d0.ambient_dim}, expected dim V = {c.dim_v}")
    elif c.w_d0.codim != c.d0:
        report.fail(f"W_D₀ has codimension {c.w_d0.codim}, expected d₀ = {c.d0}")


def _check_table(c: CurveModel, key: tuple, table: MulTable, report: ValidationReport) -> bool:
    m, n = key
    try:
        expected_shape = (c.h0(m), c.h0(n), c.h0(m + n))
    except LookupError as e:
        report.fail(f"table ({m},{n}): {e}")
        return False
    if table.shape != expected_shape:
        report.fail(f"table ({m},{n}) has shape {table.shape}, expected {expected_shape}")
        return False
    if m == n and not np.array_equal(table.tensor, table.tensor.transpose(1, 0, 2)):
        report.fail(f"table ({m},{n}) is not symmetric")
    if m * c.d0 >= 2 * c.genus + 1 and n * c.d0 >= 2 * c.genus + 1:
        rank = table_image(c, table).dim
        if rank != expected_shape[2]:
            report.fail(f"table ({m},{n}) image has dimension {rank}, expected {expected_shape[2]}")
    return True


def _check_associativity(c: CurveModel, rng: np.random.Generator, report: ValidationReport):
    """(a·b)·e = a·(b·e) on random basis triples for every chain of stored tables."""
    for (m, n), k in product(list(c.tables), sorted({key[1] for key in c.tables} | {key[0] for key in c.tables})):
        if not (c.has_table(n, k) and c.has_table(m + n, k) and c.has_table(m, n + k)):
            continue
        left_inner, left_outer = c.table(m, n), c.table(m + n, k)
        right_inner, right_outer = c.table(n, k), c.table(m, n + k)
        for _ in range(ASSOCIATIVITY_SAMPLES):
            i = int(rng.integers(0, left_inner.shape[0]))
            j = int(rng.integers(0, left_inner.shape[1]))
            l = int(rng.integers(0, right_inner.shape[1]))
            left = contract(c.field, left_inner.tensor[i, j], left_outer.tensor[:, l, :], ([0], [0]))
            right = contract(c.field, right_inner.tensor[j, l], right_outer.tensor[i, :, :], ([0], [0]))
            if not np.array_equal(left, right):
                report.fail(f"associativity fails for ({m},{n},{k}) at basis triple ({i},{j},{l})")
                break


def _check_provenance(c: CurveModel, report: ValidationReport):
    spec = spec_of(c)
    for (m, n), table in sorted(c.tables.items()):
        rebuilt = multiplication_tensor(spec, c.field, m * c.d0, n * c.d0)
        if rebuilt.shape != table.shape or not np.array_equal(rebuilt, table.tensor % c.field.modulus):
            report.fail(f"table ({m},{n}) differs from the table rebuilt from f")


def validate(c: CurveModel, rng: Optional[np.random.Generator] = None) -> ValidationReport:
    """
    Check a curve model's dimensions, tables and basepoint space.

    Args:
        c (CurveModel): The curve to check.
        rng (Optional[np.random.Generator]): Source for the associativity spot checks.

    Returns:
        ValidationReport: Empty failures when the model is consistent.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    report = ValidationReport()
    _check_dimensions(c, report)
    shapes_ok = True
    for key, table in sorted(c.tables.items()):
        report.checked_tables.append(key)
        shapes_ok = _check_table(c, key, table, report) and shapes_ok
    if shapes_ok:
        _check_associativity(c, rng, report)
    if c.f_coeffs is not None:
        _check_provenance(c, report)
    if report.ok:
        logger.info("Curve validation passed for %d tables", len(report.checked_tables))
    return report
