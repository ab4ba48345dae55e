"""Randomized property suites for field verification.

Two claims the sort's correctness rests on, checked on demand against
freshly drawn cases rather than a fixed test corpus:

* quotient/remainder order: for normalized values x < y and any d >= 1,
  x mod d >= y mod d implies x div d < y div d.  This is what lets a
  stable pass on quotient keys finish the job after the remainder pass.
* variant equivalence: bitwise keys match general keys when d is a power
  of two, and the subtraction-free variant sorts non-negative input the
  same as the general form.

Each function returns the number of violating cases; zero means pass.
"""

from __future__ import annotations

from .rng import Xoshiro256StarStar
from .sort_core import (
    GENERAL,
    SUBTRACTION_FREE,
    ElementSeq,
    bitwise_mode,
    compute_quotient_keys,
    compute_remainder_keys,
    qr_sort,
)

__all__ = ["quotient_order_violations", "variant_equivalence_mismatches"]

_VALUE_SPAN = 2_000_001  # draws cover [-1_000_000, 1_000_000]


def _draw_value(rng: Xoshiro256StarStar) -> int:
    return rng.next_below(_VALUE_SPAN) - 1_000_000


def quotient_order_violations(cases: int, seed: int) -> int:
    """Count order violations among ``cases`` random (s_i, s_j, d) triples.

    Three values are drawn so the smallest can play the role of min(S);
    the other two, normalized against it, give the (x, y) pair under test.
    Triples where the pair collapses to x == y assert nothing and pass.
    """
    if cases < 0:
        raise ValueError("cases must be non-negative")
    rng = Xoshiro256StarStar.from_seed(seed)
    violations = 0
    for _ in range(cases):
        a = _draw_value(rng)
        b = _draw_value(rng)
        c = _draw_value(rng)
        base = min(a, b, c)
        pair = sorted((a, b, c))[1:]
        x = pair[0] - base
        y = pair[1] - base
        d = rng.next_below(4096) + 1
        if x == y:
            continue
        if x % d >= y % d and not x // d < y // d:
            violations += 1
    return violations


def _random_array(rng: Xoshiro256StarStar, non_negative: bool) -> list[int]:
    n = rng.next_below(32) + 1
    if non_negative:
        # modest range keeps the d=1 quotient bin table small
        return [rng.next_below(65_536) for _ in range(n)]
    return [_draw_value(rng) for _ in range(n)]


def variant_equivalence_mismatches(cases: int, seed: int) -> int:
    """Count disagreements between key-mode variants over ``cases`` arrays.

    Per case: bitwise remainder/quotient keys are compared against the
    general ones at d = 2^shift for a random shift in [0, 30], and a
    non-negative array is fully sorted both subtraction-free and general.
    Key comparison allocates no bins, so large power-of-two divisors are
    safe here; the full sorts keep d small.
    """
    if cases < 0:
        raise ValueError("cases must be non-negative")
    rng = Xoshiro256StarStar.from_seed(seed)
    mismatches = 0
    for _ in range(cases):
        values = ElementSeq(_random_array(rng, non_negative=False))
        shift = rng.next_below(31)
        d = 1 << shift
        mode = bitwise_mode(shift)
        if compute_remainder_keys(values, d, mode).keys != compute_remainder_keys(
            values, d, GENERAL
        ).keys:
            mismatches += 1
        if compute_quotient_keys(values, d, mode).keys != compute_quotient_keys(
            values, d, GENERAL
        ).keys:
            mismatches += 1

        plain = ElementSeq(_random_array(rng, non_negative=True))
        d_small = rng.next_below(512) + 1
        if qr_sort(plain, d_small, SUBTRACTION_FREE) != qr_sort(plain, d_small, GENERAL):
            mismatches += 1
    return mismatches
