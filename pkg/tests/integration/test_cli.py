"""The kmjac command line, end to end through click's test runner."""

import json

import numpy as np
import pytest
from click.testing import CliRunner

from app import app
from cantor.mumford import mumford_to_dict, point
from cli.bench import read_csv
from curves.hyperelliptic import iter_rational_points
from tests.fixtures import fixture_path


@pytest.fixture
def run(tmp_path, restore_root_logger):
    runner = CliRunner()
    log_file = str(tmp_path / "kmjac.log")

    def invoke(*args):
        return runner.invoke(app, ["--log-file", log_file, *[str(arg) for arg in args]])

    return invoke


@pytest.fixture
def curve_file(tmp_path, run):
    path = tmp_path / "curve.json"
    result = run("new", "--p", 101, "--genus", 2, "--model", "large", "--out", path)
    assert result.exit_code == 0, result.output
    return path


@pytest.fixture
def point_files(tmp_path, run, curve_file):
    paths = []
    for seed in (1, 2):
        path = tmp_path / f"point{seed}.json"
        result = run("random", "--curve", curve_file, "--seed", seed, "--out", path)
        assert result.exit_code == 0, result.output
        paths.append(path)
    return paths


@pytest.mark.parametrize(
    """
    model,
    expected_dim,
    """,
    [
        # Success; large model
        ("large", 14),
        # Success; medium model
        ("medium", 9),
        # Success; small model
        ("small", 8),
    ],
)
def test_new(tmp_path, run, model, expected_dim):
    """Test building each model and writing its curve file."""
    path = tmp_path / f"{model}.json"
    result = run("new", "--p", 101, "--genus", 2, "--model", model, "--out", path)
    assert result.exit_code == 0, result.output
    assert f"dim V: {expected_dim}" in result.output
    assert json.loads(path.read_text(encoding="utf-8"))["kind"] == model


def test_new_from_coefficients(tmp_path, run):
    """Test an explicit equation."""
    result = run("new", "--p", 7, "--f-coeffs", "1,0,0,0,0,1", "--out", tmp_path / "c.json")
    assert result.exit_code == 0, result.output
    assert "p: 7" in result.output


@pytest.mark.parametrize(
    """
    args,
    """,
    [
        # Failure; p is not prime
        (["--p", 9, "--genus", 2],),
        # Failure; repeated root
        (["--p", 101, "--f-coeffs", "0,0,0,0,0,1"],),
        # Failure; neither an equation nor a genus
        (["--p", 101],),
        # Failure; unparsable coefficients
        (["--p", 101, "--f-coeffs", "1,a"],),
    ],
)
def test_new_bad_input(tmp_path, run, args):
    """Test bad curve parameters exit with code 2."""
    result = run("new", *args, "--out", tmp_path / "bad.json")
    assert result.exit_code == 2


def test_random_prints_json(run, curve_file):
    """Test random without --out prints the point."""
    result = run("random", "--curve", curve_file, "--seed", 5)
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["model"] == "large"
    assert data["p"] == 101
    assert data["degree"] == 5


def test_random_bad_seed_variable(run, curve_file, monkeypatch):
    """Test a malformed KMJAC_SEED is an input error."""
    monkeypatch.setenv("KMJAC_SEED", "abc")
    assert run("random", "--curve", curve_file).exit_code == 2


def test_group_operations(tmp_path, run, curve_file, point_files):
    """Test eq, neg, add, sub and addflip through the command line."""
    p1, p2 = point_files
    neg, neg_neg = tmp_path / "neg.json", tmp_path / "negneg.json"
    total, back, flipped = tmp_path / "sum.json", tmp_path / "back.json", tmp_path / "flip.json"
    assert run("op", "eq", p1, p1, "--curve", curve_file).output.strip() == "true"
    assert run("op", "eq", p1, p2, "--curve", curve_file).output.strip() == "false"
    assert run("op", "neg", p1, "--curve", curve_file, "--out", neg).exit_code == 0
    assert run("op", "neg", neg, "--curve", curve_file, "--out", neg_neg).exit_code == 0
    assert run("op", "eq", neg_neg, p1, "--curve", curve_file).output.strip() == "true"
    assert run("op", "add", p1, p2, "--curve", curve_file, "--out", total, "--general").exit_code == 0
    assert run("op", "sub", total, p2, "--curve", curve_file, "--out", back, "--streamlined").exit_code == 0
    assert run("op", "eq", back, p1, "--curve", curve_file).output.strip() == "true"
    assert run("op", "addflip", p1, neg, "--curve", curve_file, "--out", flipped).exit_code == 0
    assert run("op", "member", flipped, "--curve", curve_file).output.strip() == "true"


def test_member_rejects_random_subspace(tmp_path, run, curve_file):
    """Test membership on a random codimension-5 subspace."""
    rng = np.random.default_rng(81)
    basis = rng.integers(0, 101, (9, 14)).tolist()
    candidate = {"model": "large", "p": 101, "ambient_m": 3, "degree": 5, "basis": basis}
    path = tmp_path / "candidate.json"
    path.write_text(json.dumps(candidate), encoding="utf-8")
    result = run("op", "member", path, "--curve", curve_file)
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "false"


def test_bridge(tmp_path, run, curve_file, spec101):
    """Test bridging a Mumford pair and checking the result is a point."""
    xy = next(iter_rational_points(spec101))
    mumford = tmp_path / "mumford.json"
    mumford.write_text(json.dumps(mumford_to_dict(point(101, xy))), encoding="utf-8")
    out = tmp_path / "bridged.json"
    result = run("bridge", "--curve", curve_file, "--mumford", mumford, "--out", out)
    assert result.exit_code == 0, result.output
    assert run("op", "member", out, "--curve", curve_file).output.strip() == "true"


@pytest.mark.parametrize(
    """
    args,
    """,
    [
        # Failure; wrong number of points
        (["op", "neg"],),
        # Failure; a medium point on a large curve
        (["op", "neg", fixture_path("medium_gf7_zero_point.json")],),
    ],
)
def test_op_bad_input(run, curve_file, args):
    """Test operation input errors exit with code 2."""
    assert run(*args, "--curve", curve_file).exit_code == 2


def test_bridge_bad_mumford(tmp_path, run, curve_file):
    """Test an invalid Mumford pair is an input error."""
    mumford = tmp_path / "mumford.json"
    mumford.write_text(json.dumps({"a": [1, 0, 2], "b": [1]}), encoding="utf-8")
    assert run("bridge", "--curve", curve_file, "--mumford", mumford).exit_code == 2


def test_verify_default_curve(run):
    """Test verification of the built-in curve passes."""
    result = run("verify", "--trials", 1, "--seed", 7)
    assert result.exit_code == 0, result.output
    assert "9/9 checks passed" in result.output


def test_verify_zero_trials(run, curve_file):
    """Test zero trials still validates the curve and passes."""
    result = run("verify", "--curve", curve_file, "--trials", 0)
    assert result.exit_code == 0, result.output
    assert "PASS | curve validation" in result.output


def test_verify_corrupted_curve(tmp_path, run, curve_file):
    """Test a tampered multiplication table fails verification with exit code 1."""
    data = json.loads(curve_file.read_text(encoding="utf-8"))
    tensor = data["tables"][0]["tensor"]
    tensor[1][1][0] = (tensor[1][1][0] + 1) % 101
    corrupted = tmp_path / "corrupted.json"
    corrupted.write_text(json.dumps(data), encoding="utf-8")
    result = run("verify", "--curve", corrupted, "--trials", 1)
    assert result.exit_code == 1
    assert "FAIL | curve validation" in result.output
    assert "skipped: curve validation failed" in result.output


def test_bench_writes_csv(tmp_path, run):
    """Test a one-genus benchmark of both models."""
    csv_path = tmp_path / "bench.csv"
    result = run("bench", "--genus-list", 2, "--trials", 1, "--models", "large,medium", "--csv", csv_path, "--seed", 3)
    assert result.exit_code == 0, result.output
    rows = read_csv(str(csv_path))
    assert {(row.model, row.op) for row in rows} == {
        (model, op) for model in ("large", "medium") for op in ("addflip", "add", "eq")
    }
    assert all(row.field_ops_median > 0 for row in rows)
    assert "medium/large addflip ratio at genus 2" in result.output


def test_bench_bad_models(run):
    """Test an unknown model name exits with code 2."""
    assert run("bench", "--genus-list", 2, "--models", "huge").exit_code == 2
