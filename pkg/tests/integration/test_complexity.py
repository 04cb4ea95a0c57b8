"""Growth of field-operation counts with the genus."""

import numpy as np
import pytest

from cli.bench import fit_slope, measure, model_ratio, run_bench
from curves.curve import ModelKind


@pytest.mark.slow
def test_addflip_grows_like_a_small_power_of_the_genus():
    """Test the log-log slope of large-model addflip counts over genus 2, 4, 6, 8."""
    rows = run_bench([2, 4, 6, 8], 101, 3, [ModelKind.LARGE], np.random.default_rng(91))
    slope = fit_slope(rows, "large", "addflip")
    assert 3.0 <= slope <= 5.0


@pytest.mark.slow
def test_medium_model_is_cheaper():
    """Test medium-model addflip costs a fraction of large-model addflip at genus 2."""
    rows = run_bench([2], 101, 3, [ModelKind.LARGE, ModelKind.MEDIUM], np.random.default_rng(92))
    ratio = model_ratio(rows)
    assert ratio["genus"] == 2
    assert 0.1 <= ratio["ratio"] <= 0.6


def test_measure_counts_only_the_operation():
    """Test sampling operands is not charged to the operation."""
    rows = measure(2, 101, ModelKind.LARGE, 2, np.random.default_rng(93))
    counts = {row.op: row.field_ops_median for row in rows}
    assert counts["eq"] < counts["add"]
    assert counts["addflip"] < counts["add"]
