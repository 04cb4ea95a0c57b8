"""Unit tests for the bridge from Mumford pairs to section spaces."""

import numpy as np
import pytest

from cantor.bridge import from_point_eq, padded_divisor, section_space, to_subspace
from cantor.mumford import cantor_add, cantor_neg, check_mumford, identity, point, random_mumford
from curves.hyperelliptic import iter_rational_points
from divisors.points import point_divisor
from jacobian.jacobian import equal, zero
from jacobian.models import add, membership_point, negate


def test_section_space_of_a_point(large101, spec101):
    """Test the sections vanishing on a single affine point."""
    x0, y0 = next(iter_rational_points(spec101))
    m = point(101, (x0, y0))
    assert section_space(large101, m.a, m.b, 3) == point_divisor(large101, (x0, y0)).w


@pytest.mark.parametrize(
    """
    model,
    """,
    [
        # Success; large
        ("large101",),
        # Success; medium
        ("medium101",),
        # Success; small
        ("small101",),
    ],
)
def test_padded_divisor_degree(request, model, spec101):
    """Test padding reaches degree d₀ without leaving the class."""
    c = request.getfixturevalue(model)
    f = spec101.polynomial()
    rng = np.random.default_rng(21)
    for _ in range(3):
        x = random_mumford(2, f, rng)
        padded = padded_divisor(x, c)
        assert padded.degree == c.d0
        assert padded.at_infinity >= 0
        check_mumford(padded.pair, f, reduced=False)


@pytest.mark.parametrize(
    """
    model,
    """,
    [
        # Success; large
        ("large101",),
        # Success; medium
        ("medium101",),
        # Success; small
        ("small101",),
    ],
)
def test_identity_maps_to_zero(request, model):
    """Test the identity class lands on the zero point."""
    c = request.getfixturevalue(model)
    assert equal(to_subspace(identity(101), c), zero(c))
    assert from_point_eq(zero(c), identity(101), c)


@pytest.mark.parametrize(
    """
    model,
    """,
    [
        # Success; large
        ("large101",),
        # Success; medium
        ("medium101",),
        # Success; small
        ("small101",),
    ],
)
def test_bridged_points_are_members(request, model, spec101):
    """Test bridged classes pass membership and compare correctly."""
    c = request.getfixturevalue(model)
    f = spec101.polynomial()
    rng = np.random.default_rng(22)
    for _ in range(3):
        x, y = random_mumford(2, f, rng), random_mumford(2, f, rng)
        bridged = to_subspace(x, c)
        assert membership_point(c, bridged.w)
        assert from_point_eq(bridged, x, c)
        if x != y:
            assert not from_point_eq(bridged, y, c)


@pytest.mark.parametrize(
    """
    model,
    """,
    [
        # Success; large
        ("large101",),
        # Success; medium
        ("medium101",),
        # Success; small
        ("small101",),
    ],
)
def test_identity_pads_to_basepoint_degree(request, model, spec101):
    """Test the identity pads to an effective degree-d₀ divisor and bridges to zero."""
    c = request.getfixturevalue(model)
    padded = padded_divisor(identity(101), c)
    assert padded.degree == c.d0
    assert padded.at_infinity >= 0
    check_mumford(padded.pair, spec101.polynomial(), reduced=False)
    assert equal(to_subspace(identity(101), c), zero(c))


@pytest.mark.parametrize(
    """
    model,
    """,
    [
        # Success; large
        ("large101",),
        # Success; medium
        ("medium101",),
        # Success; small
        ("small101",),
    ],
)
def test_single_points_bridge(request, model, spec101):
    """Test classes of weight below the genus bridge to members that respect the group law."""
    c = request.getfixturevalue(model)
    f = spec101.polynomial()
    first = next(iter_rational_points(spec101))
    second = next(xy for xy in iter_rational_points(spec101) if xy[0] != first[0])
    p, q = point(101, first), point(101, second)
    bridged_p, bridged_q = to_subspace(p, c), to_subspace(q, c)
    assert membership_point(c, bridged_p.w)
    assert not equal(bridged_p, zero(c))
    assert not equal(bridged_p, bridged_q)
    assert equal(to_subspace(cantor_neg(p), c), negate(bridged_p))
    assert equal(to_subspace(cantor_add(p, q, f), c), add(bridged_p, bridged_q))
    assert equal(add(bridged_p, to_subspace(cantor_neg(p), c)), zero(c))
