"""
End-to-end cross-check batteries run by `verify`.

Every battery draws its own samples from the shared generator, so a run is reproducible from the seed alone.
"""

import logging
from typing import Callable, Dict, List, NamedTuple

import numpy as np

from arithmetic.linalg import Subspace
from cantor.bridge import to_subspace
from cantor.mumford import cantor_add, cantor_neg, random_mumford
from cli.utils import LIBRARY_ERRORS
from curves.curve import CurveModel
from curves.hyperelliptic import spec_of
from curves.validation import validate
from jacobian.jacobian import equal, zero
from jacobian.models import add, membership_point, negate, random_point

logger = logging.getLogger(__name__)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


Trial = Callable[[CurveModel, np.random.Generator], bool]


def _bridge_add(c: CurveModel, rng: np.random.Generator) -> bool:
    f = spec_of(c).polynomial()
    x, y = random_mumford(c.genus, f, rng), random_mumford(c.genus, f, rng)
    return equal(to_subspace(cantor_add(x, y, f), c), add(to_subspace(x, c), to_subspace(y, c)))


def _bridge_neg(c: CurveModel, rng: np.random.Generator) -> bool:
    x = random_mumford(c.genus, spec_of(c).polynomial(), rng)
    return equal(to_subspace(cantor_neg(x), c), negate(to_subspace(x, c)))


def _commutativity(c: CurveModel, rng: np.random.Generator) -> bool:
    x, y = random_point(c, rng), random_point(c, rng)
    return equal(add(x, y), add(y, x))


def _associativity(c: CurveModel, rng: np.random.Generator) -> bool:
    x, y, z = random_point(c, rng), random_point(c, rng), random_point(c, rng)
    return equal(add(add(x, y), z), add(x, add(y, z)))


def _identity(c: CurveModel, rng: np.random.Generator) -> bool:
    x = random_point(c, rng)
    return equal(add(x, zero(c)), x)


def _inverse(c: CurveModel, rng: np.random.Generator) -> bool:
    x = random_point(c, rng)
    return equal(add(x, negate(x)), zero(c))


def _membership_accept(c: CurveModel, rng: np.random.Generator) -> bool:
    return membership_point(c, random_point(c, rng).w)


def _membership_reject(c: CurveModel, rng: np.random.Generator) -> bool:
    candidate = Subspace.random(c.field, c.dim_v, c.dim_v - c.d0, rng)
    return not membership_point(c, candidate)


BATTERIES: Dict[str, Trial] = {
    "bridge add": _bridge_add,
    "bridge neg": _bridge_neg,
    "commutativity": _commutativity,
    "associativity": _associativity,
    "identity": _identity,
    "inverse": _inverse,
    "membership accept": _membership_accept,
    "membership reject": _membership_reject,
}


def _run_battery(name: str, trial: Trial, c: CurveModel, trials: int, rng: np.random.Generator) -> CheckResult:
    failures = 0
    for index in range(trials):
        try:
            passed = trial(c, rng)
        except LIBRARY_ERRORS as e:
            logger.warning("%s trial %d raised %s: %s", name, index + 1, type(e).__name__, e)
            passed = False
        if not passed:
            failures += 1
            logger.warning("%s trial %d failed", name, index + 1)
    detail = f"{trials - failures}/{trials} trials"
    logger.info("%s: %s", name, detail)
    return CheckResult(name, failures == 0, detail)


def run_checks(c: CurveModel, trials: int, rng: np.random.Generator) -> List[CheckResult]:
    """
    Validate the curve, then run every battery for the given number of trials.

    A curve that fails validation is not exercised further; the remaining batteries are reported as failed.

    Args:
        c (CurveModel): A hyperelliptic curve model.
        trials (int): Trials per battery; 0 runs validation only.
        rng (np.random.Generator): Shared randomness source.

    Returns:
        List[CheckResult]: One result per check, validation first.
    """
    report = validate(c, rng)
    detail = "ok" if report.ok else "; ".join(report.failures)
    results = [CheckResult("curve validation", report.ok, detail)]
    for name, trial in BATTERIES.items():
        if not report.ok:
            results.append(CheckResult(name, False, "skipped: curve validation failed"))
            continue
        results.append(_run_battery(name, trial, c, trials, rng))
    return results
