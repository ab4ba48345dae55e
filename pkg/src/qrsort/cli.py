"""Command-line interface.

Four subcommands:

* ``sort``: sort a file of integers (one decimal value per line);
* ``bench``: run the experiment sweep and write raw CSV, aggregate CSV,
  and an SVG plot;
* ``plot``: re-render the plot from an aggregate CSV;
* ``selftest``: run the randomized property suites.

Exit codes: 0 success, 1 property or correctness failure, 2 usage or data
error, 3 I/O error.  Diagnostics go to standard error only.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from .baselines import (
    DEFAULT_BIN_CAP,
    AlgorithmId,
    counting_sort_value,
    merge_sort,
    quicksort,
    radix_sort_lsd,
)
from .divisor import DivisorStrategy, select_divisor
from .errors import CsvFormatError, CorrectnessFault, QrSortError
from .harness import ExperimentConfig, RadixBaseRule, run_sweep
from .metering import CostLedger
from .reporting import (
    aggregate,
    parse_aggregate_csv,
    render_plot,
    write_aggregate_csv,
    write_raw_csv,
)
from .selftest import quotient_order_violations, variant_equivalence_mismatches
from .sort_core import (
    GENERAL,
    INT64_MAX,
    INT64_MIN,
    SUBTRACTION_FREE,
    ElementSeq,
    bitwise_mode,
    qr_sort,
    qr_sort_auto,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

_INT_LINE = re.compile(r"[+-]?[0-9]+")

_STRATEGY_NAMES = {
    "sqrt": DivisorStrategy.sqrt_range,
    "bypass": DivisorStrategy.bypass_quotient,
    "pow2": DivisorStrategy.power_of_two,
}

_MODE_NAMES = ("general", "subtraction-free", "bitwise")


class _CliError(Exception):
    """Carries the message and exit code up to main()."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _usage(message: str) -> _CliError:
    return _CliError(message, EXIT_USAGE)


def _parse_strategy(text: str) -> DivisorStrategy:
    """Named strategy, or a plain integer meaning a fixed divisor."""
    if text in _STRATEGY_NAMES:
        return _STRATEGY_NAMES[text]()
    try:
        d = int(text)
    except ValueError:
        raise _usage(
            f"unknown strategy {text!r}: expected sqrt, bypass, pow2, "
            f"or an integer divisor"
        )
    if d < 1:
        raise _usage(f"fixed divisor must be >= 1, got {d}")
    return DivisorStrategy.fixed(d)


def _parse_radix_base(text: str) -> RadixBaseRule:
    if text == "length":
        return RadixBaseRule.array_length()
    try:
        base = int(text)
    except ValueError:
        raise _usage(f"radix base must be 'length' or an integer >= 2, got {text!r}")
    if base < 2:
        raise _usage(f"radix base must be >= 2, got {base}")
    return RadixBaseRule.fixed(base)


def _parse_algorithms(text: str) -> tuple[AlgorithmId, ...]:
    by_value = {a.value: a for a in AlgorithmId}
    algos = []
    for name in text.split(","):
        name = name.strip()
        if name not in by_value:
            raise _usage(
                f"unknown algorithm {name!r}: expected a comma list drawn "
                f"from {', '.join(by_value)}"
            )
        algos.append(by_value[name])
    return tuple(algos)


def _resolve_seed(flag_value: int | None) -> int:
    """--seed wins; else QRSORT_SEED from the environment; else 0."""
    if flag_value is not None:
        if flag_value < 0:
            raise _usage("seed must be non-negative")
        return flag_value
    raw = os.environ.get("QRSORT_SEED")
    if raw is None:
        return 0
    try:
        seed = int(raw)
    except ValueError:
        raise _usage(f"QRSORT_SEED is not an integer: {raw!r}")
    if seed < 0:
        raise _usage("QRSORT_SEED must be non-negative")
    return seed


def _read_values(path: str) -> list[int]:
    """Parse one decimal integer per line; blank or junk lines are data
    errors reported with their 1-based line number."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}", EXIT_IO)
    except UnicodeDecodeError:
        raise _usage(f"{path} is not UTF-8 text")
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not _INT_LINE.fullmatch(stripped):
            raise _usage(f"{path}: line {lineno}: not a decimal integer: {stripped!r}")
        v = int(stripped)
        if v < INT64_MIN or v > INT64_MAX:
            raise _usage(f"{path}: line {lineno}: value outside 64-bit range")
        values.append(v)
    return values


def _write_values(path: str, values) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(f"{v}\n" for v in values)
    except OSError as exc:
        raise _CliError(f"cannot write {path}: {exc}", EXIT_IO)


def _sort_mode(args):
    """Resolve the qr divisor and key mode from --divisor/--strategy/--mode."""
    if args.divisor is not None and args.strategy is not None:
        raise _usage("--divisor and --strategy are mutually exclusive")
    if args.divisor is not None:
        if args.divisor < 1:
            raise _usage(f"divisor must be >= 1, got {args.divisor}")
        if args.mode == "bitwise":
            if args.divisor & (args.divisor - 1):
                raise _usage(
                    f"bitwise mode requires a power-of-two divisor, got {args.divisor}"
                )
            mode = bitwise_mode(args.divisor.bit_length() - 1)
        elif args.mode == "subtraction-free":
            mode = SUBTRACTION_FREE
        else:
            mode = GENERAL
        return args.divisor, mode
    if args.mode is not None:
        raise _usage("--mode needs an explicit --divisor")
    return None, None


def cmd_sort(args) -> int:
    values = _read_values(args.input)
    algo = AlgorithmId(args.algorithm)
    if algo is not AlgorithmId.QR and (
        args.divisor is not None or args.strategy is not None or args.mode is not None
    ):
        raise _usage("--divisor/--strategy/--mode apply to the qr algorithm only")
    if algo is not AlgorithmId.RADIX and args.radix_base is not None:
        raise _usage("--radix-base applies to the radix algorithm only")

    divisor, mode = (None, None)
    strategy = None
    if algo is AlgorithmId.QR:
        divisor, mode = _sort_mode(args)
        if divisor is None:
            strategy = args.strategy if args.strategy is not None else "sqrt"
            strategy = _parse_strategy(strategy)

    ledger = CostLedger()
    try:
        seq = ElementSeq(values)
        if algo is AlgorithmId.QR and len(seq) > 1:
            # bin tables scale with d + m/d; refuse ranges the cap excludes
            if divisor is not None:
                d = divisor
                base = 0 if mode.kind == "subtraction_free" else seq.minimum
            else:
                d = select_divisor(seq.range_size, strategy)
                base = seq.minimum
            bins = d + (seq.maximum - base) // d + 1
            if bins > args.bin_cap:
                raise _usage(
                    f"divisor {d} needs {bins} counting bins, over the cap "
                    f"{args.bin_cap}; raise --bin-cap or choose another divisor"
                )
        if algo is AlgorithmId.MERGE:
            out = merge_sort(seq, ledger)
        elif algo is AlgorithmId.QUICK:
            out = quicksort(seq, ledger)
        elif algo is AlgorithmId.COUNTING:
            out = counting_sort_value(seq, ledger, bin_cap=args.bin_cap)
        elif algo is AlgorithmId.RADIX:
            rule = args.radix_base if args.radix_base is not None else "length"
            base_rule = _parse_radix_base(rule)
            out = radix_sort_lsd(seq, base_rule.base_for(len(seq)), ledger)
        elif divisor is not None:
            out = qr_sort(seq, divisor, mode, ledger)
        else:
            out = qr_sort_auto(seq, strategy, ledger)
    except QrSortError as exc:
        raise _usage(str(exc))

    _write_values(args.output, out)
    if args.stats:
        print(
            f"{ledger.array_accesses},{ledger.comparisons},{ledger.divisions},"
            f"{ledger.modulos},{ledger.bitwise_ops},{ledger.total_units()}",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        config = ExperimentConfig(
            min_length=args.min_length,
            max_length=args.max_length,
            length_inc=args.length_inc,
            min_value=args.min_value,
            max_value=args.max_value,
            trial_count=args.trials,
            seed=_resolve_seed(args.seed),
            algorithms=_parse_algorithms(args.algorithms),
            divisor_strategy=_parse_strategy(args.strategy),
            radix_base=_parse_radix_base(args.radix_base),
            bin_cap=args.bin_cap,
            record_wall_time=not args.no_timing,
        )
    except ValueError as exc:
        raise _usage(str(exc))
    if args.jobs < 1:
        raise _usage("--jobs must be >= 1")

    try:
        result = run_sweep(config, jobs=args.jobs)
    except CorrectnessFault as exc:
        raise _CliError(f"correctness fault: {exc}", EXIT_FAIL)
    for skip in result.skips:
        print(
            f"skip: n={skip.n} trial={skip.trial} {skip.algorithm.value}: "
            f"{skip.reason}",
            file=sys.stderr,
        )
    rows = aggregate(result.records)
    if not rows:
        raise _usage("every trial was skipped; nothing to aggregate or plot")
    try:
        write_raw_csv(result.records, args.out_raw)
        write_aggregate_csv(rows, args.out_agg)
        render_plot(rows, args.out_plot)
    except OSError as exc:
        raise _CliError(f"cannot write output: {exc}", EXIT_IO)
    print(
        f"wrote {len(result.records)} records to {args.out_raw}, "
        f"{len(rows)} aggregate rows to {args.out_agg}, plot to {args.out_plot}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_plot(args) -> int:
    try:
        rows = parse_aggregate_csv(args.in_path)
    except OSError as exc:
        raise _CliError(f"cannot read {args.in_path}: {exc}", EXIT_IO)
    except CsvFormatError as exc:
        raise _usage(f"{args.in_path}: {exc}")
    except UnicodeDecodeError:
        raise _usage(f"{args.in_path} is not UTF-8 text")
    if not rows:
        raise _usage(f"{args.in_path} has no data rows; nothing to plot")
    try:
        render_plot(rows, args.out_path)
    except OSError as exc:
        raise _CliError(f"cannot write {args.out_path}: {exc}", EXIT_IO)
    return EXIT_OK


def cmd_selftest(args) -> int:
    if args.cases < 1:
        raise _usage("--cases must be >= 1")
    seed = _resolve_seed(args.seed)
    failures = 0
    order = quotient_order_violations(args.cases, seed)
    print(
        f"quotient/remainder order: {args.cases} cases, {order} violations "
        f"[{'pass' if order == 0 else 'FAIL'}]"
    )
    failures += order
    variants = variant_equivalence_mismatches(args.cases, seed + 1)
    print(
        f"variant equivalence: {args.cases} cases, {variants} mismatches "
        f"[{'pass' if variants == 0 else 'FAIL'}]"
    )
    failures += variants
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrsort",
        description="Instrumented integer sorting and cost benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="sort a file of integers, one per line")
    p_sort.add_argument("input", help="input file, one decimal integer per line")
    p_sort.add_argument("output", help="output file, sorted ascending")
    p_sort.add_argument(
        "--algorithm",
        default="qr",
        choices=[a.value for a in AlgorithmId],
        help="sorting algorithm (default: qr)",
    )
    p_sort.add_argument("--divisor", type=int, help="fixed qr divisor")
    p_sort.add_argument(
        "--strategy",
        help="qr divisor strategy: sqrt, bypass, pow2, or an integer (default: sqrt)",
    )
    p_sort.add_argument(
        "--mode",
        choices=_MODE_NAMES,
        help="qr key mode; requires --divisor (default: general)",
    )
    p_sort.add_argument("--radix-base", help="radix base: 'length' or an integer >= 2")
    p_sort.add_argument(
        "--bin-cap",
        type=int,
        default=DEFAULT_BIN_CAP,
        help="largest counting bin table to allow",
    )
    p_sort.add_argument(
        "--stats",
        action="store_true",
        help="print the cost ledger to stderr as one CSV line: "
        "accesses,comparisons,divisions,modulos,bitwise,total_units",
    )
    p_sort.set_defaults(func=cmd_sort)

    p_bench = sub.add_parser("bench", help="run the cost experiment sweep")
    p_bench.add_argument("--min-length", type=int, default=10_000)
    p_bench.add_argument("--max-length", type=int, default=1_000_000)
    p_bench.add_argument("--length-inc", type=int, default=10_000)
    p_bench.add_argument("--min-value", type=int, default=0)
    p_bench.add_argument("--max-value", type=int, default=50_000)
    p_bench.add_argument("--trials", type=int, default=10)
    p_bench.add_argument(
        "--seed", type=int, help="PRNG seed (default: QRSORT_SEED env var, then 0)"
    )
    p_bench.add_argument(
        "--algorithms",
        default=",".join(a.value for a in AlgorithmId),
        help="comma list of algorithms to run (default: all five)",
    )
    p_bench.add_argument(
        "--strategy",
        default="sqrt",
        help="qr divisor strategy: sqrt, bypass, pow2, or an integer",
    )
    p_bench.add_argument(
        "--radix-base",
        default="length",
        help="radix base: 'length' or an integer >= 2 (default: length)",
    )
    p_bench.add_argument("--bin-cap", type=int, default=DEFAULT_BIN_CAP)
    p_bench.add_argument("--out-raw", default="bench_raw.csv")
    p_bench.add_argument("--out-agg", default="bench_agg.csv")
    p_bench.add_argument("--out-plot", default="bench_plot.svg")
    p_bench.add_argument(
        "--jobs", type=int, default=1, help="parallel trial workers (default: 1)"
    )
    p_bench.add_argument(
        "--no-timing",
        action="store_true",
        help="record wall_ns as 0 so output files are byte-reproducible",
    )
    p_bench.set_defaults(func=cmd_bench)

    p_plot = sub.add_parser("plot", help="render an SVG from an aggregate CSV")
    p_plot.add_argument("--in", dest="in_path", required=True, help="aggregate CSV")
    p_plot.add_argument("--out", dest="out_path", required=True, help="SVG path")
    p_plot.set_defaults(func=cmd_plot)

    p_self = sub.add_parser("selftest", help="run the randomized property suites")
    p_self.add_argument(
        "--cases", type=int, default=10_000, help="cases per suite (default: 10000)"
    )
    p_self.add_argument(
        "--seed", type=int, help="PRNG seed (default: QRSORT_SEED env var, then 0)"
    )
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"qrsort: error: {exc}", file=sys.stderr)
        return exc.code
