"""Command handlers: curves, points, group operations, verification and benchmarks."""

import json
import logging
from typing import Optional, Tuple

import click
import numpy as np

from cantor.bridge import to_subspace
from cli.bench import BENCH_OPS, fit_slope, model_ratio, run_bench, write_csv
from cli.checks import run_checks
from cli.templates import (
    BENCH_HEADER,
    BENCH_RATIO_TEMPLATE,
    BENCH_SLOPE_TEMPLATE,
    VERIFY_FAILED_MESSAGE,
    VERIFY_SUMMARY_TEMPLATE,
)
from cli.utils import (
    InputError,
    VerificationFailed,
    curve_or_default,
    format_check_line,
    format_curve_summary,
    handle_errors,
    load_mumford,
    parse_int_list,
    parse_models,
    require_equation,
    spec_from_options,
)
from config.settings import get_seed
from curves.curve import ModelKind
from curves.hyperelliptic import build_hyperelliptic
from curves.serialization import dump_curve, load_curve
from jacobian.jacobian import JacobianPoint, equal
from jacobian.models import add, addflip, membership_point, negate, random_point, sub
from jacobian.serialization import divisor_data, dump_point, load_point, point_to_dict, read_point_data

logger = logging.getLogger(__name__)

MODEL_CHOICE = click.Choice([kind.value for kind in ModelKind], case_sensitive=False)
OPERATIONS = {"add": 2, "sub": 2, "addflip": 2, "eq": 2, "neg": 1, "member": 1}


def _emit_point(x: JacobianPoint, out: Optional[str]):
    """Write the point to out, or print it as JSON."""
    if out:
        dump_point(x, out)
        click.echo(f"wrote {out}")
    else:
        click.echo(json.dumps(point_to_dict(x)))


def register_handlers(app: click.Group):
    """Register the kmjac commands on the command group."""

    @app.command("new")
    @click.option("--p", "p", type=int, required=True, help="Odd prime field size.")
    @click.option("--f-coeffs", default=None, help="Ascending coefficients of monic f, e.g. 1,0,0,0,0,1.")
    @click.option("--genus", type=int, default=None, help="Use the default curve of this genus instead of f.")
    @click.option("--model", type=MODEL_CHOICE, default="large", show_default=True)
    @click.option("--out", type=click.Path(dir_okay=False), required=True, help="Curve file to write.")
    @handle_errors
    def cmd_new(p: int, f_coeffs: Optional[str], genus: Optional[int], model: str, out: str):
        """Build a hyperelliptic curve model and write its curve file."""
        spec = spec_from_options(p, f_coeffs, genus)
        c = build_hyperelliptic(spec, ModelKind(model.lower()))
        dump_curve(c, out)
        click.echo(format_curve_summary(c))

    @app.command("random")
    @click.option("--curve", "curve_path", type=click.Path(exists=True, dir_okay=False), required=True)
    @click.option("--seed", type=int, default=None, help="PRNG seed (falls back to KMJAC_SEED).")
    @click.option("--out", type=click.Path(dir_okay=False), default=None, help="Point file to write.")
    @handle_errors
    def cmd_random(curve_path: str, seed: Optional[int], out: Optional[str]):
        """Write a random point of the curve."""
        c = load_curve(curve_path)
        require_equation(c)
        seed = get_seed(seed)
        logger.info("Sampling a random %s point with seed %d", c.kind.value, seed)
        _emit_point(random_point(c, np.random.default_rng(seed)), out)

    @app.command("bridge")
    @click.option("--curve", "curve_path", type=click.Path(exists=True, dir_okay=False), required=True)
    @click.option("--mumford", "mumford_path", type=click.Path(exists=True, dir_okay=False), required=True)
    @click.option("--out", type=click.Path(dir_okay=False), default=None, help="Point file to write.")
    @handle_errors
    def cmd_bridge(curve_path: str, mumford_path: str, out: Optional[str]):
        """Convert a Mumford pair {a, b} into a point of the curve."""
        c = load_curve(curve_path)
        require_equation(c)
        _emit_point(to_subspace(load_mumford(c, mumford_path), c), out)

    @app.command("op")
    @click.argument("operation", type=click.Choice(sorted(OPERATIONS)))
    @click.argument("points", nargs=-1, type=click.Path(exists=True, dir_okay=False))
    @click.option("--curve", "curve_path", type=click.Path(exists=True, dir_okay=False), required=True)
    @click.option("--out", type=click.Path(dir_okay=False), default=None, help="Point file for the result.")
    @click.option("--streamlined", is_flag=True, help="Single-flip subtraction on the large model.")
    @click.option("--general", is_flag=True, help="Skip the union shortcut in large-model addition.")
    @handle_errors
    def cmd_op(
        operation: str, points: Tuple[str, ...], curve_path: str, out: Optional[str], streamlined: bool, general: bool
    ):
        """Run a group operation; eq and member print true or false."""
        if len(points) != OPERATIONS[operation]:
            raise InputError(f"{operation} takes {OPERATIONS[operation]} point file(s), got {len(points)}.")
        c = load_curve(curve_path)
        if operation == "member":
            candidate = divisor_data(c, read_point_data(points[0]))
            click.echo(str(membership_point(c, candidate.w)).lower())
            return
        args = [load_point(c, path) for path in points]
        logger.info("Running %s on %d point(s)", operation, len(args))
        if operation == "eq":
            click.echo(str(equal(*args)).lower())
        elif operation == "neg":
            _emit_point(negate(*args), out)
        elif operation == "sub":
            _emit_point(sub(*args, streamlined=streamlined), out)
        elif operation == "add":
            _emit_point(add(*args, fast_path=not general), out)
        else:
            _emit_point(addflip(*args, fast_path=not general), out)

    @app.command("verify")
    @click.option("--curve", "curve_path", type=click.Path(exists=True, dir_okay=False), default=None)
    @click.option("--trials", type=click.IntRange(min=0), default=10, show_default=True)
    @click.option("--seed", type=int, default=None, help="PRNG seed (falls back to KMJAC_SEED).")
    @handle_errors
    def cmd_verify(curve_path: Optional[str], trials: int, seed: Optional[int]):
        """Cross-check the curve against the Cantor oracle and the group axioms."""
        c = curve_or_default(curve_path)
        require_equation(c)
        seed = get_seed(seed)
        logger.info("Verifying %s model over GF(%d), %d trials, seed %d", c.kind.value, c.field.modulus, trials, seed)
        results = run_checks(c, trials, np.random.default_rng(seed))
        for result in results:
            click.echo(format_check_line(*result))
        passed = sum(1 for result in results if result.passed)
        click.echo(VERIFY_SUMMARY_TEMPLATE.format(passed=passed, total=len(results)))
        if passed != len(results):
            raise VerificationFailed(VERIFY_FAILED_MESSAGE.format(failed=len(results) - passed, total=len(results)))

    @app.command("bench")
    @click.option("--genus-list", default="2,4", show_default=True, help="Comma separated genera.")
    @click.option("--p", "p", type=int, default=101, show_default=True)
    @click.option("--trials", type=click.IntRange(min=1), default=5, show_default=True)
    @click.option("--models", default="large,medium", show_default=True, help="Comma separated models.")
    @click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="CSV file to write.")
    @click.option("--seed", type=int, default=None, help="PRNG seed (falls back to KMJAC_SEED).")
    @click.option("--fast-path/--general", default=False, show_default=True, help="Large-model union shortcut.")
    @handle_errors
    def cmd_bench(
        genus_list: str,
        p: int,
        trials: int,
        models: str,
        csv_path: Optional[str],
        seed: Optional[int],
        fast_path: bool,
    ):
        """Median field-operation counts and timings per genus and model."""
        genera = parse_int_list(genus_list)
        kinds = parse_models(models)
        rows = run_bench(genera, p, trials, kinds, np.random.default_rng(get_seed(seed)), fast_path)
        if csv_path:
            write_csv(csv_path, rows)
        click.echo(",".join(BENCH_HEADER))
        for row in rows:
            click.echo(",".join(str(value) for value in row))
        for kind in kinds:
            for op in BENCH_OPS:
                slope = fit_slope(rows, kind.value, op)
                if slope is not None:
                    click.echo(BENCH_SLOPE_TEMPLATE.format(model=kind.value, op=op, slope=slope))
        ratio = model_ratio(rows)
        if ratio is not None:
            click.echo(BENCH_RATIO_TEMPLATE.format(op="addflip", genus=ratio["genus"], ratio=ratio["ratio"]))
