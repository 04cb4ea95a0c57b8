"""Unit tests for command-line parsing helpers and output formatting."""

import pytest

from cli.bench import BenchRow, fit_slope, model_ratio, read_csv, write_csv
from cli.utils import (
    InputError,
    format_check_line,
    format_curve_summary,
    parse_int_list,
    parse_models,
    spec_from_options,
)
from curves.curve import ModelKind


@pytest.mark.parametrize(
    """
    text,
    expected_result,
    """,
    [
        # Success; coefficients
        ("1,0,0,0,0,1", [1, 0, 0, 0, 0, 1]),
        # Success; spaces and a trailing comma
        (" 2, 4 ,", [2, 4]),
        # Success; negative values
        ("-1,3", [-1, 3]),
    ],
)
def test_parse_int_list(text, expected_result):
    """Test parsing comma separated integers."""
    assert parse_int_list(text) == expected_result


@pytest.mark.parametrize(
    """
    text,
    """,
    [
        # Failure; not a number
        ("1,x",),
        # Failure; empty
        ("",),
        # Failure; only commas
        (",,",),
    ],
)
def test_parse_int_list_rejects(text):
    """Test malformed integer lists are input errors."""
    with pytest.raises(InputError) as info:
        parse_int_list(text)
    assert info.value.exit_code == 2


def test_parse_models():
    """Test model lists are case-insensitive and unknown names are rejected."""
    assert parse_models("Large, small") == [ModelKind.LARGE, ModelKind.SMALL]
    with pytest.raises(InputError):
        parse_models("large,huge")


def test_spec_from_options(spec7, spec101):
    """Test explicit coefficients, the default curve and the missing case."""
    assert spec_from_options(7, "1,0,0,0,0,1", None) == spec7
    assert spec_from_options(101, None, 2) == spec101
    with pytest.raises(InputError):
        spec_from_options(101, None, None)


def test_format_curve_summary(large7):
    """Test the curve summary lists the model dimensions."""
    summary = format_curve_summary(large7)
    assert summary.splitlines() == ["model: large", "p: 7", "genus: 2", "d0: 5", "N: 15", "dim V: 14"]


def test_format_check_line():
    """Test PASS and FAIL lines."""
    assert format_check_line("identity", True, "3/3 trials").startswith("PASS | identity")
    assert format_check_line("identity", False, "2/3 trials").endswith("| 2/3 trials")


def test_bench_csv_round_trip(tmp_path):
    """Test benchmark tables survive a write and read."""
    rows = [BenchRow(2, "large", "addflip", 1200, 1.5), BenchRow(4, "large", "addflip", 9600, 7.25)]
    path = tmp_path / "bench.csv"
    write_csv(str(path), rows)
    assert read_csv(str(path)) == rows


def test_read_csv_rejects_other_headers(tmp_path):
    """Test a table with the wrong header is refused."""
    path = tmp_path / "other.csv"
    path.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        read_csv(str(path))


def test_fit_slope_and_ratio():
    """Test the log-log slope and the medium/large ratio on synthetic rows."""
    rows = [
        BenchRow(2, "large", "addflip", 100, 1.0),
        BenchRow(4, "large", "addflip", 1600, 2.0),
        BenchRow(2, "medium", "addflip", 40, 0.5),
    ]
    assert fit_slope(rows, "large", "addflip") == pytest.approx(4.0)
    assert fit_slope(rows, "medium", "addflip") is None
    assert model_ratio(rows) == {"genus": 2, "ratio": pytest.approx(0.4)}
    assert model_ratio(rows, op="eq") is None
