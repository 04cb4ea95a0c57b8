"""Shared curve fixtures."""

import logging

import numpy as np
import pytest

from curves.curve import ModelKind
from curves.hyperelliptic import HyperellipticSpec, build_hyperelliptic, default_spec


@pytest.fixture(scope="session")
def spec7():
    """y² = x⁵ + 1 over GF(7)."""
    return HyperellipticSpec(7, (1, 0, 0, 0, 0, 1))


@pytest.fixture(scope="session")
def spec101():
    """y² = x⁵ + 3x + 1 over GF(101)."""
    return default_spec(2, 101)


@pytest.fixture(scope="session")
def large7(spec7):
    return build_hyperelliptic(spec7, ModelKind.LARGE)


@pytest.fixture(scope="session")
def medium7(spec7):
    return build_hyperelliptic(spec7, ModelKind.MEDIUM)


@pytest.fixture(scope="session")
def small7(spec7):
    return build_hyperelliptic(spec7, ModelKind.SMALL)


@pytest.fixture(scope="session")
def large101(spec101):
    return build_hyperelliptic(spec101, ModelKind.LARGE)


@pytest.fixture(scope="session")
def medium101(spec101):
    return build_hyperelliptic(spec101, ModelKind.MEDIUM)


@pytest.fixture(scope="session")
def small101(spec101):
    return build_hyperelliptic(spec101, ModelKind.SMALL)


@pytest.fixture(scope="session")
def models101(large101, medium101, small101):
    return {"large": large101, "medium": medium101, "small": small101}


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def restore_root_logger():
    """Put the root handlers back after a test reconfigures logging."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)
