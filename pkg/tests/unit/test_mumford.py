"""Unit tests for the Mumford representation and Cantor's algorithm."""

import json
from itertools import product

import numpy as np
import pytest

from cantor.mumford import (
    InvalidMumfordError,
    MumfordDivisor,
    cantor_add,
    cantor_compose,
    cantor_neg,
    cantor_sub,
    check_mumford,
    coefficients,
    degree,
    identity,
    mumford_from_dict,
    mumford_to_dict,
    point,
    poly,
    random_mumford,
)
from curves.hyperelliptic import HyperellipticSpec
from tests.fixtures import fixture_path
from tests.helpers.sampling import all_classes_genus_one

F7 = HyperellipticSpec(7, (1, 0, 0, 0, 0, 1)).polynomial()
ELLIPTIC = HyperellipticSpec(7, (1, 0, 0, 1))


def test_poly_coefficients():
    """Test ascending coefficient conversion and the zero polynomial."""
    assert coefficients(poly([1, 5, 1], 7)) == [1, 5, 1]
    assert coefficients(poly([-1, 8], 7)) == [6, 1]
    assert coefficients(poly([], 7)) == []
    assert degree(poly([0, 0], 7)) == -float("inf")


def test_doubling_on_gf7():
    """Test 2·(1, 3) on y² = x⁵ + 1 over GF(7)."""
    p = point(7, (1, 3))
    doubled = cantor_add(p, p, F7)
    assert mumford_to_dict(doubled) == {"a": [1, 5, 1], "b": [1, 2]}
    check_mumford(doubled, F7)


def test_doubling_golden_file():
    """Test the golden Mumford file parses to the doubled point."""
    with open(fixture_path("gf7_double_point.json"), encoding="utf-8") as handle:
        data = json.load(handle)
    p = point(7, (1, 3))
    assert mumford_from_dict(data, F7) == cantor_add(p, p, F7)


@pytest.mark.parametrize(
    """
    a,
    b,
    """,
    [
        # Failure; a not monic
        ([1, 5, 2], [1, 2]),
        # Failure; deg b ≥ deg a
        ([6, 1], [1, 2]),
        # Failure; b² ≢ f mod a
        ([6, 1], [2]),
        # Failure; deg a above the genus
        ([6, 1, 0, 1], [3]),
        # Failure; a is zero
        ([], [1]),
    ],
)
def test_check_mumford_rejects(a, b):
    """Test invalid Mumford pairs."""
    with pytest.raises(InvalidMumfordError):
        check_mumford(MumfordDivisor(poly(a, 7), poly(b, 7)), F7)


def test_malformed_mumford_data():
    """Test that malformed files raise InvalidMumfordError."""
    with pytest.raises(InvalidMumfordError):
        mumford_from_dict({"a": [1]}, F7)
    with pytest.raises(InvalidMumfordError):
        mumford_from_dict({"a": [6, 1], "b": [2]}, F7)


def test_identity_and_inverse():
    """Test x + 0 = x, x − x = 0 and −(−x) = x."""
    rng = np.random.default_rng(8)
    for _ in range(10):
        x = random_mumford(2, F7, rng)
        assert cantor_add(x, identity(7), F7) == x
        assert cantor_add(x, cantor_neg(x), F7) == identity(7)
        assert cantor_sub(x, x, F7) == identity(7)
        assert cantor_neg(cantor_neg(x)) == x
    assert cantor_neg(identity(7)) == identity(7)


@pytest.mark.parametrize(
    """
    x,
    y,
    expected,
    """,
    [
        # Success; a point plus its opposite
        (point(7, (1, 3)), point(7, (1, 4)), identity(7)),
        # Success; a Weierstrass point doubled
        (point(7, (6, 0)), point(7, (6, 0)), identity(7)),
        # Success; identity plus identity
        (identity(7), identity(7), identity(7)),
        # Success; identity plus a Weierstrass point
        (identity(7), point(7, (6, 0)), point(7, (6, 0))),
        # Success; identity plus an ordinary point
        (identity(7), point(7, (1, 3)), point(7, (1, 3))),
    ],
)
def test_cancelling_and_identity_sums(x, y, expected):
    """Test sums where b₁ + b₂ vanishes or one side is the identity."""
    assert cantor_add(x, y, F7) == expected
    assert cantor_add(y, x, F7) == expected
    check_mumford(cantor_compose(x, y, F7), F7, reduced=False)


def test_doubling_through_a_weierstrass_point():
    """Test 2·(P + W) = 2·P, where the doubled pair shares the Weierstrass factor of a."""
    p, w = point(7, (1, 3)), point(7, (6, 0))
    total = cantor_add(p, w, F7)
    assert total.degree == 2
    assert cantor_add(total, total, F7) == cantor_add(p, p, F7)
    assert cantor_add(total, cantor_neg(total), F7) == identity(7)


def test_compose_without_reduction():
    """Test composing points with distinct x coordinates multiplies the a polynomials."""
    p = point(7, (0, 1))
    q = point(7, (1, 3))
    r = point(7, (5, 2))
    composed = cantor_compose(cantor_compose(p, q, F7), r, F7)
    assert composed.degree == 3
    check_mumford(composed, F7, reduced=False)
    with pytest.raises(InvalidMumfordError):
        check_mumford(composed, F7)


def test_elliptic_group_is_closed_and_abelian():
    """Test the oracle group law on all 12 classes of y² = x³ + 1 over GF(7)."""
    f = ELLIPTIC.polynomial()
    classes = all_classes_genus_one(ELLIPTIC)
    assert len(classes) == 12
    members = set(classes)
    zero = identity(7)
    for x, y in product(classes, repeat=2):
        total = cantor_add(x, y, f)
        check_mumford(total, f)
        assert total in members
        assert total == cantor_add(y, x, f)
    for x in classes:
        assert cantor_add(x, zero, f) == x
        assert cantor_add(x, cantor_neg(x), f) == zero


def test_elliptic_group_is_associative():
    """Test associativity on every triple of classes of y² = x³ + 1 over GF(7)."""
    f = ELLIPTIC.polynomial()
    classes = all_classes_genus_one(ELLIPTIC)
    sums = {(x, y): cantor_add(x, y, f) for x, y in product(classes, repeat=2)}
    for x, y, z in product(classes, repeat=3):
        assert sums[(sums[(x, y)], z)] == sums[(x, sums[(y, z)])]


def test_random_mumford_is_valid_and_spread(spec101):
    """Test random classes are reduced, valid and varied."""
    f = spec101.polynomial()
    rng = np.random.default_rng(9)
    draws = [random_mumford(2, f, rng) for _ in range(50)]
    for x in draws:
        check_mumford(x, f)
        assert x.degree <= 2
    assert len(set(draws)) >= 10
