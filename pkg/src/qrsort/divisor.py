"""Divisor selection policies and the bin-cost yardstick behind them.

For a value span of ``m`` the two counting passes touch ``d`` remainder
bins and ``(m - 1) div d + 1`` quotient bins; ``pass_cost`` is that total.
It is minimised near ``d = sqrt(m)``, collapses to a single pass at
``d = m + 1`` (every quotient is zero), and stays within one bin of the
true discrete optimum when rounded down, which is what SQRT_RANGE does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidRangeError

__all__ = ["DivisorStrategy", "select_divisor", "pass_cost"]


@dataclass(frozen=True)
class DivisorStrategy:
    """Named divisor policy; ``fixed_d`` is meaningful for FIXED only."""

    kind: str
    fixed_d: int = 0

    _KINDS = ("sqrt_range", "bypass_quotient", "power_of_two", "fixed")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown divisor strategy {self.kind!r}")
        if self.kind == "fixed" and self.fixed_d < 1:
            raise ValueError("fixed divisor must be >= 1")
        if self.kind != "fixed" and self.fixed_d != 0:
            raise ValueError("fixed_d only applies to the fixed strategy")

    @classmethod
    def sqrt_range(cls) -> "DivisorStrategy":
        return cls("sqrt_range")

    @classmethod
    def bypass_quotient(cls) -> "DivisorStrategy":
        return cls("bypass_quotient")

    @classmethod
    def power_of_two(cls) -> "DivisorStrategy":
        return cls("power_of_two")

    @classmethod
    def fixed(cls, d: int) -> "DivisorStrategy":
        return cls("fixed", d)


def select_divisor(range_size: int, strategy: DivisorStrategy) -> int:
    """Divisor for a span of ``range_size`` values under the given policy.

    SQRT_RANGE: floor of the square root, never below 1.
    BYPASS_QUOTIENT: range_size + 1, which forces the single-pass path.
    POWER_OF_TWO: 2**c with c = round(log2(range_size) / 2), the power whose
    exponent is nearest half the bit scale, floor 1; pairs with bitwise keys.
    FIXED: the caller's divisor, unchanged.
    """
    if range_size < 1:
        raise InvalidRangeError(f"range_size must be >= 1, got {range_size}")
    if strategy.kind == "sqrt_range":
        return max(1, math.isqrt(range_size))
    if strategy.kind == "bypass_quotient":
        return range_size + 1
    if strategy.kind == "power_of_two":
        c = round(0.5 * math.log2(range_size))
        return 1 << max(0, c)
    return strategy.fixed_d


def pass_cost(range_size: int, divisor: int) -> int:
    """Total counting bins across both passes: d + (m - 1) div d + 1."""
    if range_size < 1:
        raise InvalidRangeError(f"range_size must be >= 1, got {range_size}")
    if divisor < 1:
        raise InvalidRangeError(f"divisor must be >= 1, got {divisor}")
    return divisor + (range_size - 1) // divisor + 1
