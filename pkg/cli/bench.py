"""
Field-operation and wall-clock measurements for addflip, add and eq across genera.

Counts come from the field's operation counter, reset after the operands are sampled so only the operation itself
is charged.
"""

import csv
import logging
import statistics
import time
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence

import numpy as np

from cli.templates import BENCH_HEADER
from curves.curve import ModelKind
from curves.hyperelliptic import build_hyperelliptic, default_spec
from jacobian.jacobian import JacobianPoint, equal
from jacobian.models import add, addflip, random_point

logger = logging.getLogger(__name__)

BENCH_OPS = ("addflip", "add", "eq")


class BenchRow(NamedTuple):
    genus: int
    model: str
    op: str
    field_ops_median: int
    wall_ms_median: float


def _operation(op: str, fast_path: bool) -> Callable[[JacobianPoint, JacobianPoint], object]:
    if op == "addflip":
        return lambda x, y: addflip(x, y, fast_path=fast_path)
    if op == "add":
        return lambda x, y: add(x, y, fast_path=fast_path)
    return equal


def measure(
    genus: int, p: int, kind: ModelKind, trials: int, rng: np.random.Generator, fast_path: bool = False
) -> List[BenchRow]:
    """
    Median field operations and milliseconds per operation on one model of the default curve.

    Args:
        genus (int): Genus of the default curve.
        p (int): Field size.
        kind (ModelKind): Model to build.
        trials (int): Samples per operation.
        rng (np.random.Generator): Source for the operands.
        fast_path (bool): Allow the large model's union shortcut.

    Returns:
        List[BenchRow]: One row per operation.
    """
    c = build_hyperelliptic(default_spec(genus, p), kind)
    rows = []
    for op in BENCH_OPS:
        run = _operation(op, fast_path)
        counts, times = [], []
        for _ in range(trials):
            x, y = random_point(c, rng), random_point(c, rng)
            c.field.reset_count()
            start = time.perf_counter()
            run(x, y)
            times.append((time.perf_counter() - start) * 1000.0)
            counts.append(c.field.op_count())
        row = BenchRow(genus, kind.value, op, int(statistics.median_low(counts)), round(statistics.median(times), 3))
        logger.info("Bench %s", row)
        rows.append(row)
    return rows


def run_bench(
    genera: Sequence[int],
    p: int,
    trials: int,
    models: Sequence[ModelKind],
    rng: np.random.Generator,
    fast_path: bool = False,
) -> List[BenchRow]:
    rows = []
    for genus in genera:
        for kind in models:
            rows.extend(measure(genus, p, kind, trials, rng, fast_path))
    return rows


def fit_slope(rows: Iterable[BenchRow], model: str, op: str) -> Optional[float]:
    """Least-squares slope of log(field ops) against log(genus), or None with fewer than two genera."""
    points = sorted((row.genus, row.field_ops_median) for row in rows if row.model == model and row.op == op)
    if len({genus for genus, _ in points}) < 2:
        return None
    genera = np.log([genus for genus, _ in points])
    counts = np.log([max(count, 1) for _, count in points])
    return float(np.polyfit(genera, counts, 1)[0])


def model_ratio(rows: Iterable[BenchRow], op: str = "addflip") -> Optional[Dict[str, float]]:
    """Medium over large field-op ratio at the smallest genus measured on both models."""
    counts = {(row.genus, row.model): row.field_ops_median for row in rows if row.op == op}
    shared = sorted(genus for genus, model in counts if model == "medium" and (genus, "large") in counts)
    if not shared:
        return None
    genus = shared[0]
    return {"genus": genus, "ratio": counts[(genus, "medium")] / counts[(genus, "large")]}


def write_csv(path: str, rows: Iterable[BenchRow]):
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(BENCH_HEADER)
        writer.writerows(rows)
    logger.info("Wrote benchmark table to %s", path)


def read_csv(path: str) -> List[BenchRow]:
    """Read a table written by write_csv."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != BENCH_HEADER:
            raise ValueError(f"{path} does not have the header {','.join(BENCH_HEADER)}.")
        return [
            BenchRow(
                int(entry["genus"]),
                entry["model"],
                entry["op"],
                int(entry["field_ops_median"]),
                float(entry["wall_ms_median"]),
            )
            for entry in reader
        ]
