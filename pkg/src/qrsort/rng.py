"""Pinned pseudo-random generator for the benchmark harness.

Seeding and generation are fixed so that any implementation, in any
language, reproduces the same shuffles for the same (seed, n, trial):

* a splitmix64 expansion of the 64-bit seed fills the xoshiro256** state;
* xoshiro256** (Blackman/Vigna) produces the raw 64-bit stream;
* bounded draws use rejection sampling on the top range, which is unbiased;
* the stream for trial ``t`` of length ``n`` is seeded by folding ``n`` and
  ``t`` into the sweep seed with splitmix64 steps (see
  :func:`derive_stream_seed`), so results do not depend on scheduling.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """One splitmix64 step: advance by the golden gamma and finalise."""
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Seed expander; also usable as a tiny standalone generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


class Xoshiro256StarStar:
    """xoshiro256** with 64-bit outputs and unbiased bounded draws."""

    __slots__ = ("_state",)

    def __init__(self, state: tuple[int, int, int, int]):
        if all(s == 0 for s in state):
            raise ValueError("xoshiro256** state must not be all zero")
        self._state = tuple(s & _MASK64 for s in state)

    @classmethod
    def from_seed(cls, seed: int) -> "Xoshiro256StarStar":
        sm = SplitMix64(seed)
        state = (sm.next_u64(), sm.next_u64(), sm.next_u64(), sm.next_u64())
        if all(s == 0 for s in state):
            # unreachable in practice; splitmix64 output is never 4x zero
            state = (_GOLDEN, 0, 0, 0)
        return cls(state)

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._state
        r = (s1 * 5) & _MASK64
        r = ((((r << 7) | (r >> 57)) & _MASK64) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        self._state = (s0, s1, s2, s3)
        return r

    def next_below(self, bound: int) -> int:
        """Uniform draw from [0, bound) by rejection; bound >= 1."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        # largest multiple of bound that fits in 64 bits; draws at or above
        # it would bias the modulo and are re-drawn
        limit = ((1 << 64) // bound) * bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def derive_stream_seed(seed: int, n: int, trial: int) -> int:
    """Fold (seed, n, trial) into one 64-bit stream seed, order-sensitively."""
    s = _mix64(seed & _MASK64)
    s = _mix64(s ^ (n & _MASK64))
    s = _mix64(s ^ (trial & _MASK64))
    return s


def trial_rng(seed: int, n: int, trial: int) -> Xoshiro256StarStar:
    """Generator for one (n, trial) cell of a sweep."""
    return Xoshiro256StarStar.from_seed(derive_stream_seed(seed, n, trial))
