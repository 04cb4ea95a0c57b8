"""Utility functions shared by the command handlers."""

import functools
import json
import logging
from typing import Callable, List, Optional

import click

from cantor.mumford import MumfordDivisor, mumford_from_dict
from cli.templates import CHECK_LINE_TEMPLATE, CURVE_SUMMARY_TEMPLATE
from curves.curve import CurveModel, ModelKind
from curves.hyperelliptic import HyperellipticSpec, build_hyperelliptic, default_spec, spec_of
from curves.serialization import CurveFormatError, load_curve

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_GENUS = 2
DEFAULT_VERIFY_PRIME = 101

# Library errors that are reported as bad input rather than crashes
LIBRARY_ERRORS = (ValueError, LookupError, ArithmeticError, RuntimeError, OSError)


class InputError(click.ClickException):
    """Usage or input error; exits with code 2."""

    exit_code = 2


class VerificationFailed(click.ClickException):
    """A verification battery failed; exits with code 1."""

    exit_code = 1


def handle_errors(command: Callable) -> Callable:
    """
    Turn library errors raised inside a command into InputError.

    Args:
        command (Callable): The command callback.

    Returns:
        Callable: The wrapped callback.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except click.ClickException:
            raise
        except LIBRARY_ERRORS as e:
            logger.error("%s failed: %s", command.__name__, e)
            raise InputError(str(e)) from e

    return wrapper


def parse_int_list(text: str) -> List[int]:
    """
    Parse a comma separated list of integers such as "1,0,0,0,0,1".

    Args:
        text (str): The raw option value.

    Returns:
        List[int]: The parsed integers.
    """
    try:
        values = [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as e:
        raise InputError(f"Expected a comma separated list of integers, got {text!r}.") from e
    if not values:
        raise InputError("Expected at least one integer.")
    return values


def parse_models(text: str) -> List[ModelKind]:
    try:
        return [ModelKind(part.strip().lower()) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InputError(f"Unknown model in {text!r}; use large, medium or small.") from e


def spec_from_options(p: int, f_coeffs: Optional[str], genus: Optional[int]) -> HyperellipticSpec:
    """The curve named by --f-coeffs, or the default curve of the given genus."""
    if f_coeffs is not None:
        return HyperellipticSpec(p, tuple(parse_int_list(f_coeffs)))
    if genus is None:
        raise InputError("Give either --f-coeffs or --genus.")
    return default_spec(genus, p)


def curve_or_default(path: Optional[str]) -> CurveModel:
    """Load a curve file, or build the large genus-2 model of the default curve over GF(101)."""
    if path is not None:
        return load_curve(path)
    return build_hyperelliptic(default_spec(DEFAULT_VERIFY_GENUS, DEFAULT_VERIFY_PRIME), ModelKind.LARGE)


def require_equation(c: CurveModel):
    if c.f_coeffs is None:
        raise InputError("This command needs a curve file that records its hyperelliptic equation.")


def load_mumford(c: CurveModel, path: str) -> MumfordDivisor:
    """Read a Mumford file {a, b} for the curve's equation."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as e:
        raise CurveFormatError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise CurveFormatError(f"{path} does not hold a JSON object.")
    return mumford_from_dict(data, spec_of(c).polynomial())


def format_curve_summary(c: CurveModel) -> str:
    return CURVE_SUMMARY_TEMPLATE.format(kind=c.kind.value, p=c.field.modulus, **c.describe())


def format_check_line(name: str, passed: bool, detail: str) -> str:
    return CHECK_LINE_TEMPLATE.format(status="PASS" if passed else "FAIL", name=name, detail=detail)
