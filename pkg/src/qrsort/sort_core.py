"""Quotient-remainder sorting built on a keyed counting sort.

The sort decomposes each element ``s`` into a remainder key
``(s - min) mod d`` and a quotient key ``(s - min) div d`` for a divisor
``d >= 1``, then runs one stable counting pass per key, remainders first.
Because a smaller remainder key loses to the quotient pass whenever the
quotients differ, the composition orders the elements fully; when every
quotient is zero (``max - min < d``) the quotient pass is skipped and a
single counting pass with copy-back suffices.

Key modes:

* GENERAL: keys as above, works for any 64-bit input;
* SUBTRACTION_FREE: keys ``s mod d`` and ``s div d`` without normalising by
  the minimum; requires non-negative input, produces identical output with
  a wider quotient bin table;
* BITWISE: for ``d = 2**shift_bits``, replaces mod/div with mask/shift;
  key sequences and output match GENERAL exactly.

Every function meters its work against the contract in
:mod:`qrsort.metering`; the per-phase access counts are spelled out in the
docstrings below so a ledger can be audited by hand.
"""

from __future__ import annotations

from itertools import accumulate
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidDivisorError,
    KeyRangeError,
    ModeMismatchError,
    RangeOverflowError,
)
from .metering import CostLedger

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

__all__ = [
    "INT64_MIN",
    "INT64_MAX",
    "ElementSeq",
    "KeySeq",
    "QrKeyMode",
    "GENERAL",
    "SUBTRACTION_FREE",
    "bitwise_mode",
    "counting_key_sort",
    "counting_key_sorted",
    "compute_remainder_keys",
    "compute_quotient_keys",
    "qr_sort",
    "qr_sort_auto",
]


class ElementSeq:
    """Immutable, validated sequence of 64-bit signed integers.

    Construction rejects non-integers, values outside the signed 64-bit
    range, and sequences whose span ``max - min + 1`` itself overflows a
    signed 64-bit integer (the span is what key computation divides by, so
    it must be representable).
    """

    __slots__ = ("_items", "_min", "_max")

    def __init__(self, items: Iterable[int]):
        items = tuple(items)
        for v in items:
            if not isinstance(v, int):
                raise TypeError(f"elements must be int, got {type(v).__name__}")
        if items:
            mn = min(items)
            mx = max(items)
            if mn < INT64_MIN or mx > INT64_MAX:
                raise RangeOverflowError(
                    f"elements must lie in [{INT64_MIN}, {INT64_MAX}]"
                )
            if mx - mn + 1 > INT64_MAX:
                raise RangeOverflowError(
                    "max - min + 1 does not fit in a signed 64-bit integer"
                )
        else:
            mn = mx = None
        self._items = items
        self._min = mn
        self._max = mx

    @classmethod
    def _trusted(cls, items: tuple, mn, mx) -> "ElementSeq":
        # internal fast path for outputs that are permutations of a
        # validated input
        seq = object.__new__(cls)
        seq._items = items
        seq._min = mn
        seq._max = mx
        return seq

    @property
    def minimum(self) -> int:
        if self._min is None:
            raise ValueError("empty sequence has no minimum")
        return self._min

    @property
    def maximum(self) -> int:
        if self._max is None:
            raise ValueError("empty sequence has no maximum")
        return self._max

    @property
    def range_size(self) -> int:
        """max - min + 1; the number of distinct values the span can hold."""
        return self.maximum - self.minimum + 1

    def to_list(self) -> list[int]:
        return list(self._items)

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def __getitem__(self, i):
        return self._items[i]

    def __eq__(self, other):
        if isinstance(other, ElementSeq):
            return self._items == other._items
        if isinstance(other, (list, tuple)):
            return list(self._items) == list(other)
        return NotImplemented

    def __repr__(self):
        if len(self._items) <= 8:
            return f"ElementSeq({list(self._items)})"
        head = ", ".join(map(str, self._items[:6]))
        return f"ElementSeq([{head}, ...] len={len(self._items)})"


class KeySeq:
    """Non-negative integer keys plus the exclusive bound they live under."""

    __slots__ = ("keys", "key_bound")

    def __init__(self, keys: Iterable[int], key_bound: int):
        keys = list(keys)
        if key_bound < 1:
            raise ValueError("key_bound must be >= 1")
        if keys:
            if min(keys) < 0 or max(keys) >= key_bound:
                raise KeyRangeError(f"keys must lie in [0, {key_bound})")
        self.keys = keys
        self.key_bound = key_bound

    @classmethod
    def _trusted(cls, keys: list[int], key_bound: int) -> "KeySeq":
        seq = object.__new__(cls)
        seq.keys = keys
        seq.key_bound = key_bound
        return seq

    def __len__(self):
        return len(self.keys)

    def __eq__(self, other):
        if isinstance(other, KeySeq):
            return self.keys == other.keys and self.key_bound == other.key_bound
        return NotImplemented

    def __repr__(self):
        return f"KeySeq({self.keys!r}, key_bound={self.key_bound})"


@dataclass(frozen=True)
class QrKeyMode:
    """Key-computation mode; ``shift_bits`` is meaningful for bitwise only."""

    kind: str
    shift_bits: int = 0

    def __post_init__(self):
        if self.kind not in ("general", "subtraction_free", "bitwise"):
            raise ValueError(f"unknown key mode {self.kind!r}")
        if self.shift_bits < 0:
            raise ValueError("shift_bits must be >= 0")
        if self.kind != "bitwise" and self.shift_bits != 0:
            raise ValueError("shift_bits only applies to the bitwise mode")


GENERAL = QrKeyMode("general")
SUBTRACTION_FREE = QrKeyMode("subtraction_free")


def bitwise_mode(shift_bits: int) -> QrKeyMode:
    """Mode for divisors of the form 2**shift_bits."""
    return QrKeyMode("bitwise", shift_bits)


# ---------------------------------------------------------------------------
# kernels: operate on plain lists, trust their inputs, meter in bulk


def _counting_pass(source, dest, counts, keys, copy_back: bool, ledger: CostLedger):
    """One stable counting pass: count, cumulate, place backwards.

    Metering (b = len(counts), n = len(source)):

    * frequency loop: key read + bin read + bin write = 3 accesses/element;
    * cumulative loop: two bin reads + one bin write = 3 accesses per bin
      after the first, run over the full table even when n = 0;
    * placement loop (back to front, which is what makes equal keys keep
      their order): key read + bin read + element read + element write +
      bin write = 5 accesses/element;
    * copy-back, when requested: read + write = 2 accesses/element.
    """
    n = len(source)
    nbins = len(counts)
    for k in keys:
        counts[k] += 1
    counts[:] = accumulate(counts)
    for i in range(n - 1, -1, -1):
        k = keys[i]
        c = counts[k] - 1
        dest[c] = source[i]
        counts[k] = c
    accesses = 8 * n + 3 * (nbins - 1)
    if copy_back:
        source[:] = dest
        accesses += 2 * n
    ledger.array_accesses += accesses
    ledger.counting_passes.append(nbins)


def _scan_min_max(values, ledger: CostLedger):
    """Single scan for both extremes: n accesses, 2(n-1) comparisons."""
    n = len(values)
    mn = min(values)
    mx = max(values)
    ledger.array_accesses += n
    ledger.comparisons += 2 * (n - 1)
    return mn, mx


def _remainder_keys(values, divisor, mode, base, ledger: CostLedger):
    """Key pass: element read + key write = 2 accesses, plus one mod or mask
    per element."""
    n = len(values)
    if mode.kind == "bitwise":
        mask = divisor - 1
        keys = [(v - base) & mask for v in values]
        ledger.bitwise_ops += n
    else:
        keys = [(v - base) % divisor for v in values]
        ledger.modulos += n
    ledger.array_accesses += 2 * n
    return keys


def _quotient_keys(values, divisor, mode, base, ledger: CostLedger):
    """Key pass: element read + key write = 2 accesses, plus one div or
    shift per element."""
    n = len(values)
    if mode.kind == "bitwise":
        shift = mode.shift_bits
        keys = [(v - base) >> shift for v in values]
        ledger.bitwise_ops += n
    else:
        keys = [(v - base) // divisor for v in values]
        ledger.divisions += n
    ledger.array_accesses += 2 * n
    return keys


def _qr_sort_list(values: list, divisor: int, mode: QrKeyMode, ledger: CostLedger) -> list:
    """Sort ``values`` (length >= 2) in place and return it.

    Remainder pass first.  The quotient bound ``(max - base) div d`` is
    scalar setup and unmetered; when it is zero the remainder pass alone
    sorts the array and runs with copy-back.  Quotient keys are computed
    from the remainder-sorted buffer against the cached minimum (the pass
    permutes, so the extremes cannot change).
    """
    n = len(values)
    mn, mx = _scan_min_max(values, ledger)
    base = 0 if mode.kind == "subtraction_free" else mn
    max_quot = (mx - base) // divisor

    rem_keys = _remainder_keys(values, divisor, mode, base, ledger)
    counts = [0] * divisor
    ledger.array_accesses += divisor  # zero-initialising the bins
    buf = [0] * n

    if max_quot == 0:
        _counting_pass(values, buf, counts, rem_keys, True, ledger)
        return values

    _counting_pass(values, buf, counts, rem_keys, False, ledger)
    quot_keys = _quotient_keys(buf, divisor, mode, base, ledger)
    counts_q = [0] * (max_quot + 1)
    ledger.array_accesses += max_quot + 1
    _counting_pass(buf, values, counts_q, quot_keys, False, ledger)
    return values


def _check_divisor_and_mode(divisor: int, mode: QrKeyMode, minimum) -> None:
    if divisor < 1:
        raise InvalidDivisorError(f"divisor must be >= 1, got {divisor}")
    if mode.kind == "bitwise" and divisor != (1 << mode.shift_bits):
        raise ModeMismatchError(
            f"bitwise mode with shift_bits={mode.shift_bits} requires "
            f"divisor {1 << mode.shift_bits}, got {divisor}"
        )
    if mode.kind == "subtraction_free" and minimum is not None and minimum < 0:
        raise ModeMismatchError("subtraction-free mode requires non-negative input")


# ---------------------------------------------------------------------------
# public operations


def counting_key_sort(
    source: list,
    dest: list,
    counts: list[int],
    keys: KeySeq,
    copy_back: bool,
    ledger: CostLedger,
) -> None:
    """Stably sort ``source`` into ``dest`` by the given keys.

    ``counts`` must arrive zeroed with ``len(counts) == keys.key_bound``
    (zeroing is the caller's work and metered by the caller); it is consumed
    and its contents are unspecified afterwards.  ``source`` elements are
    moved, never compared, so any payload type works.  With ``copy_back``
    the sorted output is written back into ``source`` as well.
    """
    if len(source) != len(keys) or len(dest) != len(source):
        raise ValueError("source, dest, and keys must have equal length")
    if len(counts) != keys.key_bound:
        raise KeyRangeError(
            f"counts buffer has {len(counts)} bins but keys were computed "
            f"with key_bound {keys.key_bound}"
        )
    _counting_pass(source, dest, counts, keys.keys, copy_back, ledger)


def counting_key_sorted(source: Sequence, keys: KeySeq, ledger: CostLedger) -> list:
    """Convenience wrapper that allocates the buffers itself.

    Allocates and zeroes the counts table (metered at one write per bin,
    same as the quotient-remainder driver) and returns the sorted list.
    """
    src = list(source)
    dest = [None] * len(src)
    counts = [0] * keys.key_bound
    ledger.array_accesses += keys.key_bound
    counting_key_sort(src, dest, counts, keys, False, ledger)
    return dest


def compute_remainder_keys(
    s: ElementSeq,
    divisor: int,
    mode: QrKeyMode = GENERAL,
    ledger: CostLedger | None = None,
) -> KeySeq:
    """Remainder key per element; key bound is the divisor itself.

    GENERAL and BITWISE normalise by min(s) (metered as a minimum scan:
    n accesses, n-1 comparisons); SUBTRACTION_FREE takes the raw value.
    """
    ledger = ledger if ledger is not None else CostLedger()
    mn = s._min
    _check_divisor_and_mode(divisor, mode, mn)
    if len(s) == 0:
        return KeySeq._trusted([], divisor)
    if mode.kind == "subtraction_free":
        base = 0
    else:
        base = mn
        ledger.array_accesses += len(s)
        ledger.comparisons += len(s) - 1
    keys = _remainder_keys(s._items, divisor, mode, base, ledger)
    return KeySeq._trusted(keys, divisor)


def compute_quotient_keys(
    s: ElementSeq,
    divisor: int,
    mode: QrKeyMode = GENERAL,
    ledger: CostLedger | None = None,
) -> KeySeq:
    """Quotient key per element; key bound is the largest quotient plus one.

    Needs both extremes (bound for GENERAL/BITWISE, validation and bound for
    SUBTRACTION_FREE), metered as one min/max scan.
    """
    ledger = ledger if ledger is not None else CostLedger()
    _check_divisor_and_mode(divisor, mode, s._min)
    if len(s) == 0:
        return KeySeq._trusted([], 1)
    mn, mx = _scan_min_max(s._items, ledger)
    base = 0 if mode.kind == "subtraction_free" else mn
    keys = _quotient_keys(s._items, divisor, mode, base, ledger)
    return KeySeq._trusted(keys, (mx - base) // divisor + 1)


def qr_sort(
    a: ElementSeq,
    divisor: int,
    mode: QrKeyMode = GENERAL,
    ledger: CostLedger | None = None,
) -> ElementSeq:
    """Stable two-pass sort by remainder then quotient keys.

    Empty and singleton inputs return immediately without touching the
    ledger.  See :func:`_qr_sort_list` and :func:`_counting_pass` for the
    exact access accounting.
    """
    ledger = ledger if ledger is not None else CostLedger()
    _check_divisor_and_mode(divisor, mode, a._min)
    if len(a) <= 1:
        return ElementSeq._trusted(a._items, a._min, a._max)
    out = _qr_sort_list(list(a._items), divisor, mode, ledger)
    return ElementSeq._trusted(tuple(out), a._min, a._max)


def qr_sort_auto(
    a: ElementSeq,
    strategy,
    ledger: CostLedger | None = None,
) -> ElementSeq:
    """Sort with the divisor chosen by a strategy (see :mod:`qrsort.divisor`).

    The POWER_OF_TWO strategy switches key computation to bitwise mode; the
    other strategies, including FIXED divisors that happen to be powers of
    two, use general arithmetic.
    """
    from .divisor import select_divisor

    ledger = ledger if ledger is not None else CostLedger()
    if len(a) <= 1:
        return ElementSeq._trusted(a._items, a._min, a._max)
    d = select_divisor(a.range_size, strategy)
    if strategy.kind == "power_of_two":
        mode = bitwise_mode(d.bit_length() - 1)
    else:
        mode = GENERAL
    out = _qr_sort_list(list(a._items), d, mode, ledger)
    return ElementSeq._trusted(tuple(out), a._min, a._max)
