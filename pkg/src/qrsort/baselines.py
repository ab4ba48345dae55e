"""Reference sorts instrumented under the same cost contract.

Four classics to benchmark the quotient-remainder sort against:

* merge sort: top-down, stable, one reusable auxiliary buffer, metered
  copy-back after every merge;
* quicksort: median-of-three pivot (first/middle/last), two-way in-place
  partition, iterative with the larger side deferred; not stable;
* counting sort by value: keys are ``v - min``, one bin per value in the
  span, guarded by a bin cap so absurd spans fail fast instead of
  exhausting memory;
* LSD radix sort: digit keys ``(v - min) div base**p mod base`` with a true
  division and modulo per element per pass.
"""

from __future__ import annotations

from enum import Enum

from .errors import RangeExceedsMemoryError
from .metering import CostLedger
from .sort_core import ElementSeq, _counting_pass, _scan_min_max

DEFAULT_BIN_CAP = 1 << 28

__all__ = [
    "AlgorithmId",
    "DEFAULT_BIN_CAP",
    "merge_sort",
    "quicksort",
    "counting_sort_value",
    "radix_sort_lsd",
]


class AlgorithmId(Enum):
    MERGE = "merge"
    QUICK = "quick"
    COUNTING = "counting"
    RADIX = "radix"
    QR = "qr"


# canonical ordering for records, aggregates, and plots
ALGORITHM_ORDER = {algo: i for i, algo in enumerate(AlgorithmId)}


# ---------------------------------------------------------------------------
# kernels


def _merge_sort_list(values: list, ledger: CostLedger) -> list:
    """Sort a copy of ``values`` and return it.

    Per merge of a lo/mid/hi window of length L: each element is read once
    when it is first examined, written once into the buffer, and copied back
    (read + write), so accesses are exactly 4L; comparisons are one per
    head-to-head step and stop when either run empties.  Ties take the left
    run, which is the stability argument.
    """
    out = list(values)
    n = len(out)
    if n <= 1:
        return out
    aux = [None] * n
    accesses = 0
    comparisons = 0

    def sort(lo: int, hi: int) -> None:
        nonlocal accesses, comparisons
        if hi - lo <= 1:
            return
        mid = (lo + hi) >> 1
        sort(lo, mid)
        sort(mid, hi)
        i = lo
        j = mid
        k = lo
        vi = out[i]
        vj = out[j]
        while True:
            comparisons += 1
            if vj < vi:
                aux[k] = vj
                k += 1
                j += 1
                if j == hi:
                    aux[k : k + (mid - i)] = out[i:mid]
                    break
                vj = out[j]
            else:
                aux[k] = vi
                k += 1
                i += 1
                if i == mid:
                    aux[k : k + (hi - j)] = out[j:hi]
                    break
                vi = out[i]
        out[lo:hi] = aux[lo:hi]
        accesses += 4 * (hi - lo)

    sort(0, n)
    ledger.array_accesses += accesses
    ledger.comparisons += comparisons
    return out


def _quicksort_list(values: list, ledger: CostLedger) -> list:
    """Sort a copy of ``values`` in place and return it.

    Scan tests cost one read and one comparison; a swap is the literal
    tuple swap, two reads plus two writes; median-of-three reads three
    elements and spends two or three comparisons.  Equal-heavy input still
    splits near the middle because both scans stop on equality.
    """
    a = list(values)
    n = len(a)
    if n <= 1:
        return a
    accesses = 0
    comparisons = 0
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        while hi - lo >= 2:
            mid = (lo + hi) >> 1
            x = a[lo]
            y = a[mid]
            z = a[hi]
            accesses += 3
            if x <= y:
                comparisons += 2
                if y <= z:
                    p = y
                else:
                    comparisons += 1
                    p = z if x <= z else x
            else:
                comparisons += 2
                if x <= z:
                    p = x
                else:
                    comparisons += 1
                    p = z if y <= z else y
            i = lo - 1
            j = hi + 1
            while True:
                while True:
                    i += 1
                    accesses += 1
                    comparisons += 1
                    if a[i] >= p:
                        break
                while True:
                    j -= 1
                    accesses += 1
                    comparisons += 1
                    if a[j] <= p:
                        break
                if i >= j:
                    break
                a[i], a[j] = a[j], a[i]
                accesses += 4
            # iterate into the smaller side, defer the larger
            if j - lo <= hi - j - 1:
                stack.append((j + 1, hi))
                hi = j
            else:
                stack.append((lo, j))
                lo = j + 1
        if hi - lo == 1:
            x = a[lo]
            y = a[hi]
            accesses += 2
            comparisons += 1
            if y < x:
                a[lo] = y
                a[hi] = x
                accesses += 2
    ledger.array_accesses += accesses
    ledger.comparisons += comparisons
    return a


def _counting_sort_value_list(values: list, ledger: CostLedger, bin_cap: int) -> list:
    mn, mx = _scan_min_max(values, ledger)
    span = mx - mn + 1
    if span > bin_cap:
        raise RangeExceedsMemoryError(
            f"value span {span} exceeds the counting bin cap {bin_cap}"
        )
    keys = [v - mn for v in values]
    ledger.array_accesses += 2 * len(values)
    counts = [0] * span
    ledger.array_accesses += span
    out = [None] * len(values)
    _counting_pass(values, out, counts, keys, False, ledger)
    return out


def _radix_sort_lsd_list(values: list, base: int, ledger: CostLedger) -> list:
    mn, mx = _scan_min_max(values, ledger)
    top = mx - mn
    n = len(values)
    src = list(values)
    dst = [None] * n
    power = 1
    while True:
        keys = [(v - mn) // power % base for v in src]
        ledger.array_accesses += 2 * n
        ledger.divisions += n
        ledger.modulos += n
        counts = [0] * base
        ledger.array_accesses += base
        _counting_pass(src, dst, counts, keys, False, ledger)
        src, dst = dst, src
        power *= base
        if power > top:
            return src


# ---------------------------------------------------------------------------
# public operations


def merge_sort(a: ElementSeq, ledger: CostLedger | None = None) -> ElementSeq:
    """Stable top-down merge sort."""
    ledger = ledger if ledger is not None else CostLedger()
    if len(a) <= 1:
        return ElementSeq._trusted(a._items, a._min, a._max)
    out = _merge_sort_list(a._items, ledger)
    return ElementSeq._trusted(tuple(out), a._min, a._max)


def quicksort(a: ElementSeq, ledger: CostLedger | None = None) -> ElementSeq:
    """In-place quicksort; fast on average, not stable."""
    ledger = ledger if ledger is not None else CostLedger()
    if len(a) <= 1:
        return ElementSeq._trusted(a._items, a._min, a._max)
    out = _quicksort_list(a._items, ledger)
    return ElementSeq._trusted(tuple(out), a._min, a._max)


def counting_sort_value(
    a: ElementSeq,
    ledger: CostLedger | None = None,
    bin_cap: int = DEFAULT_BIN_CAP,
) -> ElementSeq:
    """Stable counting sort with one bin per value in the span."""
    ledger = ledger if ledger is not None else CostLedger()
    if len(a) <= 1:
        return ElementSeq._trusted(a._items, a._min, a._max)
    out = _counting_sort_value_list(list(a._items), ledger, bin_cap)
    return ElementSeq._trusted(tuple(out), a._min, a._max)


def radix_sort_lsd(
    a: ElementSeq,
    base: int,
    ledger: CostLedger | None = None,
) -> ElementSeq:
    """Stable least-significant-digit radix sort over min-normalised values.

    Runs ``floor(log_base(max - min)) + 1`` counting passes (a single pass
    when every normalised value is below the base).
    """
    if base < 2:
        raise ValueError(f"radix base must be >= 2, got {base}")
    ledger = ledger if ledger is not None else CostLedger()
    if len(a) <= 1:
        return ElementSeq._trusted(a._items, a._min, a._max)
    out = _radix_sort_lsd_list(list(a._items), base, ledger)
    return ElementSeq._trusted(tuple(out), a._min, a._max)
