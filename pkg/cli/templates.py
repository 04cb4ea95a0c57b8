"""Template strings for command output."""

CURVE_SUMMARY_TEMPLATE = """model: {kind}
p: {p}
genus: {genus}
d0: {d0}
N: {N}
dim V: {dim_v}"""

CHECK_LINE_TEMPLATE = "{status:<4} | {name:<20} | {detail}"

VERIFY_SUMMARY_TEMPLATE = "{passed}/{total} checks passed"

VERIFY_FAILED_MESSAGE = "{failed} of {total} checks failed"

BENCH_HEADER = ("genus", "model", "op", "field_ops_median", "wall_ms_median")

BENCH_SLOPE_TEMPLATE = "{model} {op}: log-log slope {slope:.2f}"

BENCH_RATIO_TEMPLATE = "medium/large {op} ratio at genus {genus}: {ratio:.3f}"
