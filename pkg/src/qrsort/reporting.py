"""Aggregation, CSV serialisation, and the SVG cost plot.

Raw schema (one row per record):

    n,m,trial,algorithm,array_accesses,comparisons,divisions,modulos,bitwise_ops,total_units,wall_ns

Aggregate schema (one row per (algorithm, n), trials averaged):

    n,algorithm,mean_units,ln_mean_units

Files are UTF-8 with LF line endings and always carry the header.  Floats
are written with repr, which round-trips exactly, so parse(write(x)) == x
and re-rendering a parsed aggregate reproduces the plot byte for byte.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

from .baselines import ALGORITHM_ORDER, AlgorithmId
from .errors import CsvFormatError
from .harness import ResultRecord
from .metering import CostLedger

__all__ = [
    "AggregateRow",
    "aggregate",
    "write_raw_csv",
    "write_aggregate_csv",
    "parse_raw_csv",
    "parse_aggregate_csv",
    "render_plot",
]

RAW_HEADER = [
    "n",
    "m",
    "trial",
    "algorithm",
    "array_accesses",
    "comparisons",
    "divisions",
    "modulos",
    "bitwise_ops",
    "total_units",
    "wall_ns",
]

AGGREGATE_HEADER = ["n", "algorithm", "mean_units", "ln_mean_units"]

_ALGO_BY_VALUE = {a.value: a for a in AlgorithmId}


@dataclass
class AggregateRow:
    n: int
    algorithm: AlgorithmId
    mean_units: float
    ln_mean_units: float


def aggregate(records: list[ResultRecord]) -> list[AggregateRow]:
    """Mean unit totals per (algorithm, n), rows in (algorithm, n) order.

    The mean over trials is taken exactly (rational arithmetic) and then
    correctly rounded to a float; the log is of the mean, not the mean of
    logs.
    """
    groups: dict[tuple[AlgorithmId, int], list[int]] = {}
    for rec in records:
        groups.setdefault((rec.algorithm, rec.n), []).append(rec.cost.total_units())
    rows = []
    for (algo, n) in sorted(groups, key=lambda k: (ALGORITHM_ORDER[k[0]], k[1])):
        totals = groups[(algo, n)]
        mean = float(Fraction(sum(totals), len(totals)))
        rows.append(AggregateRow(n, algo, mean, math.log(mean)))
    return rows


def _open_for_csv(path, mode):
    return open(path, mode, encoding="utf-8", newline="")


def write_raw_csv(records: list[ResultRecord], path) -> None:
    """One row per record, in the order given; header always present."""
    with _open_for_csv(path, "w") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RAW_HEADER)
        for r in records:
            c = r.cost
            writer.writerow(
                [
                    r.n,
                    r.m,
                    r.trial,
                    r.algorithm.value,
                    c.array_accesses,
                    c.comparisons,
                    c.divisions,
                    c.modulos,
                    c.bitwise_ops,
                    c.total_units(),
                    r.wall_ns,
                ]
            )


def write_aggregate_csv(rows: list[AggregateRow], path) -> None:
    with _open_for_csv(path, "w") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(AGGREGATE_HEADER)
        for row in rows:
            writer.writerow(
                [row.n, row.algorithm.value, repr(row.mean_units), repr(row.ln_mean_units)]
            )


def _parse_int(text: str, line: int, column: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CsvFormatError(f"column {column!r} is not an integer: {text!r}", line)


def _parse_float(text: str, line: int, column: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise CsvFormatError(f"column {column!r} is not a number: {text!r}", line)


def _parse_algorithm(text: str, line: int) -> AlgorithmId:
    try:
        return _ALGO_BY_VALUE[text]
    except KeyError:
        raise CsvFormatError(f"unknown algorithm {text!r}", line)


def parse_raw_csv(path) -> list[ResultRecord]:
    """Read a raw CSV back into records.

    The CSV does not carry per-pass bin counts, so the parsed ledgers have
    an empty ``counting_passes``; every schema column round-trips exactly.
    """
    with _open_for_csv(path, "r") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError("empty file, expected a header", 1)
        if header != RAW_HEADER:
            raise CsvFormatError(f"bad header {header!r}", 1)
        records = []
        for line, row in enumerate(reader, 2):
            if len(row) != len(RAW_HEADER):
                raise CsvFormatError(
                    f"expected {len(RAW_HEADER)} columns, got {len(row)}", line
                )
            ledger = CostLedger(
                array_accesses=_parse_int(row[4], line, "array_accesses"),
                comparisons=_parse_int(row[5], line, "comparisons"),
                divisions=_parse_int(row[6], line, "divisions"),
                modulos=_parse_int(row[7], line, "modulos"),
                bitwise_ops=_parse_int(row[8], line, "bitwise_ops"),
            )
            total = _parse_int(row[9], line, "total_units")
            if total != ledger.total_units():
                raise CsvFormatError(
                    f"total_units {total} does not match the counters", line
                )
            records.append(
                ResultRecord(
                    n=_parse_int(row[0], line, "n"),
                    m=_parse_int(row[1], line, "m"),
                    trial=_parse_int(row[2], line, "trial"),
                    algorithm=_parse_algorithm(row[3], line),
                    cost=ledger,
                    wall_ns=_parse_int(row[10], line, "wall_ns"),
                )
            )
    return records


def parse_aggregate_csv(path) -> list[AggregateRow]:
    with _open_for_csv(path, "r") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError("empty file, expected a header", 1)
        if header != AGGREGATE_HEADER:
            raise CsvFormatError(f"bad header {header!r}", 1)
        rows = []
        for line, row in enumerate(reader, 2):
            if len(row) != len(AGGREGATE_HEADER):
                raise CsvFormatError(
                    f"expected {len(AGGREGATE_HEADER)} columns, got {len(row)}", line
                )
            rows.append(
                AggregateRow(
                    n=_parse_int(row[0], line, "n"),
                    algorithm=_parse_algorithm(row[1], line),
                    mean_units=_parse_float(row[2], line, "mean_units"),
                    ln_mean_units=_parse_float(row[3], line, "ln_mean_units"),
                )
            )
    return rows


# ---------------------------------------------------------------------------
# SVG plot

_COLORS = {
    AlgorithmId.MERGE: "#1f77b4",
    AlgorithmId.QUICK: "#ff7f0e",
    AlgorithmId.COUNTING: "#2ca02c",
    AlgorithmId.RADIX: "#d62728",
    AlgorithmId.QR: "#9467bd",
}

_WIDTH = 800
_HEIGHT = 500
_MARGIN_LEFT = 78
_MARGIN_RIGHT = 150
_MARGIN_TOP = 32
_MARGIN_BOTTOM = 58


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if count < 2:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _fmt_tick(value: float) -> str:
    return f"{value:.6g}"


def render_plot(rows: list[AggregateRow], path) -> None:
    """Write an SVG 1.1 line chart of ln(mean units) against n.

    One polyline per algorithm (canonical order), a legend naming each, and
    labelled axes.  Output is a pure function of the rows: coordinates are
    formatted to fixed precision and nothing environmental (time, locale,
    library version) is embedded, so equal input gives equal bytes.
    """
    if not rows:
        raise ValueError("nothing to plot: no aggregate rows")
    series: dict[AlgorithmId, list[AggregateRow]] = {}
    for row in rows:
        series.setdefault(row.algorithm, []).append(row)
    for algo in series:
        series[algo].sort(key=lambda r: r.n)
    algos = sorted(series, key=ALGORITHM_ORDER.__getitem__)

    xs = [row.n for row in rows]
    ys = [row.ln_mean_units for row in rows]
    xmin, xmax = float(min(xs)), float(max(xs))
    ymin, ymax = min(ys), max(ys)
    if xmin == xmax:
        xmin -= 1.0
        xmax += 1.0
    if ymin == ymax:
        ymin -= 0.5
        ymax += 0.5

    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def sx(x: float) -> float:
        return _MARGIN_LEFT + (x - xmin) / (xmax - xmin) * plot_w

    def sy(y: float) -> float:
        return _MARGIN_TOP + (ymax - y) / (ymax - ymin) * plot_h

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">'
    )
    out.append(f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>')

    x0 = _MARGIN_LEFT
    x1 = _MARGIN_LEFT + plot_w
    y0 = _MARGIN_TOP + plot_h
    y1 = _MARGIN_TOP
    out.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black" stroke-width="1"/>'
    )
    out.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black" stroke-width="1"/>'
    )

    for tx in _ticks(xmin, xmax):
        px = sx(tx)
        out.append(
            f'<line x1="{px:.2f}" y1="{y0}" x2="{px:.2f}" y2="{y0 + 5}" '
            f'stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{px:.2f}" y="{y0 + 20}" font-family="sans-serif" '
            f'font-size="12" text-anchor="middle">{_fmt_tick(tx)}</text>'
        )
    for ty in _ticks(ymin, ymax):
        py = sy(ty)
        out.append(
            f'<line x1="{x0 - 5}" y1="{py:.2f}" x2="{x0}" y2="{py:.2f}" '
            f'stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x0 - 9}" y="{py + 4:.2f}" font-family="sans-serif" '
            f'font-size="12" text-anchor="end">{_fmt_tick(ty)}</text>'
        )

    out.append(
        f'<text x="{(x0 + x1) / 2:.2f}" y="{_HEIGHT - 14}" font-family="sans-serif" '
        f'font-size="14" text-anchor="middle">array length n</text>'
    )
    out.append(
        f'<text x="20" y="{(y0 + y1) / 2:.2f}" font-family="sans-serif" '
        f'font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 20 {(y0 + y1) / 2:.2f})">'
        f"ln(mean computational units)</text>"
    )

    for algo in algos:
        pts = " ".join(f"{sx(r.n):.2f},{sy(r.ln_mean_units):.2f}" for r in series[algo])
        out.append(
            f'<polyline fill="none" stroke="{_COLORS[algo]}" stroke-width="1.5" '
            f'points="{pts}"/>'
        )

    lx = x1 + 16
    ly = y1 + 10
    for idx, algo in enumerate(algos):
        cy = ly + idx * 20
        out.append(
            f'<line x1="{lx}" y1="{cy}" x2="{lx + 22}" y2="{cy}" '
            f'stroke="{_COLORS[algo]}" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{lx + 28}" y="{cy + 4}" font-family="sans-serif" '
            f'font-size="13">{algo.value}</text>'
        )

    out.append("</svg>")
    data = "\n".join(out) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)
