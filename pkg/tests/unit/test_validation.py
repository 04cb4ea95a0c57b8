"""Unit tests for curve validation."""

import dataclasses

import numpy as np
import pytest

from curves.curve import CurveModel, MulTable
from curves.validation import table_image, validate


@pytest.mark.parametrize(
    """
    model,
    """,
    [
        # Success; large model
        ("large7",),
        # Success; medium model
        ("medium7",),
        # Success; small model
        ("small7",),
        # Success; large model over GF(101)
        ("large101",),
    ],
)
def test_built_models_validate(request, model):
    """Test freshly built models pass every check."""
    report = validate(request.getfixturevalue(model))
    assert report.ok, report.failures
    assert report.checked_tables


def test_surjectivity_of_large_tables(large7):
    """Test mul₃₃ maps onto all of H⁰(6D₀)."""
    assert table_image(large7, large7.table(3, 3)).dim == 29


def _with_table(c: CurveModel, key, tensor) -> CurveModel:
    tables = dict(c.tables)
    tables[key] = MulTable(key[0], key[1], tensor)
    return dataclasses.replace(c, tables=tables)


def test_corrupted_entry_fails(large7):
    """Test a single changed table entry is caught."""
    tensor = np.array(large7.table(2, 1).tensor, copy=True)
    tensor[0, 0, 0] = (tensor[0, 0, 0] + 1) % 7
    report = validate(_with_table(large7, (2, 1), tensor))
    assert not report.ok
    assert any("(2,1)" in failure for failure in report.failures)


def test_wrong_shape_fails(medium7):
    """Test a truncated table is caught."""
    tensor = np.array(medium7.table(2, 2).tensor[:-1], copy=True)
    report = validate(_with_table(medium7, (2, 2), tensor))
    assert not report.ok
    assert any("shape" in failure for failure in report.failures)


def test_wrong_dimension_fails(small7):
    """Test an h0_dims entry that contradicts Riemann–Roch is caught."""
    dims = dict(small7.h0_dims)
    dims[7] = 19
    report = validate(dataclasses.replace(small7, h0_dims=dims))
    assert not report.ok
