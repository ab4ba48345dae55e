"""Experiment harness: deterministic arrays, shuffles, trials, and sweeps.

A sweep walks array lengths from ``min_length`` to ``max_length`` in
``length_inc`` steps.  For each length one evenly spaced array is generated,
then reshuffled once per trial (each trial shuffles the order the previous
trial left behind, so trial 1 is not a shuffle of the pristine array).  The
random stream for a trial is derived from (seed, n, trial), which makes the
records independent of scheduling and lets trials run in parallel.

Every algorithm in a trial sorts its own copy of the same permutation; all
outputs are checked against one reference before any record is emitted, and
a disagreement aborts the run.  A counting sort whose span exceeds the bin
cap is skipped with a marker instead of crashing the sweep.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .baselines import (
    ALGORITHM_ORDER,
    DEFAULT_BIN_CAP,
    AlgorithmId,
    _counting_sort_value_list,
    _merge_sort_list,
    _quicksort_list,
    _radix_sort_lsd_list,
)
from .divisor import DivisorStrategy, select_divisor
from .errors import CorrectnessFault, RangeExceedsMemoryError
from .metering import CostLedger
from .rng import Xoshiro256StarStar, trial_rng
from .sort_core import GENERAL, _qr_sort_list, bitwise_mode

__all__ = [
    "RadixBaseRule",
    "ExperimentConfig",
    "ResultRecord",
    "TrialSkip",
    "SweepResult",
    "generate_array",
    "fisher_yates_shuffle",
    "run_trial",
    "run_sweep",
]

ALL_ALGORITHMS = tuple(AlgorithmId)


@dataclass(frozen=True)
class RadixBaseRule:
    """Radix base policy: the array length, or a fixed base."""

    kind: str
    base: int = 0

    def __post_init__(self):
        if self.kind not in ("length", "fixed"):
            raise ValueError(f"unknown radix base rule {self.kind!r}")
        if self.kind == "fixed" and self.base < 2:
            raise ValueError("fixed radix base must be >= 2")

    @classmethod
    def array_length(cls) -> "RadixBaseRule":
        return cls("length")

    @classmethod
    def fixed(cls, base: int) -> "RadixBaseRule":
        return cls("fixed", base)

    def base_for(self, n: int) -> int:
        if self.kind == "fixed":
            return self.base
        return max(2, n)


@dataclass(frozen=True)
class ExperimentConfig:
    min_length: int = 10_000
    max_length: int = 1_000_000
    length_inc: int = 10_000
    min_value: int = 0
    max_value: int = 50_000
    trial_count: int = 10
    seed: int = 0
    algorithms: tuple[AlgorithmId, ...] = ALL_ALGORITHMS
    divisor_strategy: DivisorStrategy = field(
        default_factory=DivisorStrategy.sqrt_range
    )
    radix_base: RadixBaseRule = field(default_factory=RadixBaseRule.array_length)
    bin_cap: int = DEFAULT_BIN_CAP
    record_wall_time: bool = True

    def __post_init__(self):
        if self.min_length < 1:
            raise ValueError("min_length must be >= 1")
        if self.max_length < self.min_length:
            raise ValueError("max_length must be >= min_length")
        if self.length_inc < 1:
            raise ValueError("length_inc must be >= 1")
        if self.max_value < self.min_value:
            raise ValueError("max_value must be >= min_value")
        if self.trial_count < 1:
            raise ValueError("trial_count must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative 64-bit integer")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ValueError("algorithms must not repeat")
        if self.bin_cap < 1:
            raise ValueError("bin_cap must be >= 1")
        # keep the tuple in canonical order so record order never depends
        # on how the caller spelled the list
        ordered = tuple(sorted(self.algorithms, key=ALGORITHM_ORDER.__getitem__))
        object.__setattr__(self, "algorithms", ordered)

    def lengths(self) -> range:
        return range(self.min_length, self.max_length + 1, self.length_inc)


@dataclass
class ResultRecord:
    n: int
    m: int
    trial: int
    algorithm: AlgorithmId
    cost: CostLedger
    wall_ns: int


@dataclass
class TrialSkip:
    n: int
    m: int
    trial: int
    algorithm: AlgorithmId
    reason: str


@dataclass
class SweepResult:
    records: list[ResultRecord]
    skips: list[TrialSkip]


def generate_array(n: int, min_value: int, max_value: int) -> list[int]:
    """Evenly spaced values from min_value to max_value, in that order.

    ``a[i] = min_value + floor(i * (max_value - min_value) / (n - 1))``, so
    both endpoints are always present for n >= 2 and the span is exact; a
    single-element array is just ``[min_value]``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if max_value < min_value:
        raise ValueError("max_value must be >= min_value")
    if n == 1:
        return [min_value]
    span = max_value - min_value
    last = n - 1
    return [min_value + (i * span) // last for i in range(n)]


def fisher_yates_shuffle(values: list, rng: Xoshiro256StarStar) -> None:
    """Uniform in-place shuffle driven by the pinned generator.

    Walks i from the top down, swapping a[i] with a[j] for an unbiased
    j in [0, i].  The generator arithmetic is inlined (this is the hottest
    harness loop); the stream is bit-identical to calling
    ``rng.next_below(i + 1)`` per step, which the tests assert.
    """
    s0, s1, s2, s3 = rng._state
    mask = (1 << 64) - 1
    top = 1 << 64
    for i in range(len(values) - 1, 0, -1):
        bound = i + 1
        limit = (top // bound) * bound
        while True:
            r = (s1 * 5) & mask
            r = ((((r << 7) | (r >> 57)) & mask) * 9) & mask
            t = (s1 << 17) & mask
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & mask
            if r < limit:
                break
        j = r % bound
        values[i], values[j] = values[j], values[i]
    rng._state = (s0, s1, s2, s3)


def _run_algorithm(
    algo: AlgorithmId, values: list, m: int, config: ExperimentConfig
) -> tuple[list, CostLedger, int]:
    """Sort a private copy under one algorithm; returns (output, cost, ns)."""
    work = list(values)
    ledger = CostLedger()
    if len(work) <= 1:
        return work, ledger, 0
    start = time.perf_counter_ns() if config.record_wall_time else 0
    if algo is AlgorithmId.MERGE:
        out = _merge_sort_list(work, ledger)
    elif algo is AlgorithmId.QUICK:
        out = _quicksort_list(work, ledger)
    elif algo is AlgorithmId.COUNTING:
        out = _counting_sort_value_list(work, ledger, config.bin_cap)
    elif algo is AlgorithmId.RADIX:
        out = _radix_sort_lsd_list(work, config.radix_base.base_for(len(work)), ledger)
    elif algo is AlgorithmId.QR:
        d = select_divisor(m, config.divisor_strategy)
        if config.divisor_strategy.kind == "power_of_two":
            mode = bitwise_mode(d.bit_length() - 1)
        else:
            mode = GENERAL
        out = _qr_sort_list(work, d, mode, ledger)
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown algorithm {algo}")
    wall = (time.perf_counter_ns() - start) if config.record_wall_time else 0
    return out, ledger, wall


def run_trial(
    values: list, trial: int, config: ExperimentConfig
) -> tuple[list[ResultRecord], list[TrialSkip]]:
    """Run every configured algorithm over one shuffled array.

    Each algorithm gets its own copy.  Outputs are verified against a
    reference (equality to one sorted reference is equality to each other,
    and the reference is sorted by construction); any mismatch raises
    CorrectnessFault.  Degenerate n <= 1 still emits records, with zero
    cost, so record counts stay predictable.
    """
    n = len(values)
    m = (max(values) - min(values) + 1) if n else 0
    records: list[ResultRecord] = []
    skips: list[TrialSkip] = []
    reference = sorted(values)
    for algo in config.algorithms:
        if algo is AlgorithmId.COUNTING and m > config.bin_cap:
            skips.append(
                TrialSkip(n, m, trial, algo, f"span {m} exceeds bin cap {config.bin_cap}")
            )
            continue
        out, ledger, wall = _run_algorithm(algo, values, m, config)
        if out != reference:
            raise CorrectnessFault(
                f"{algo.value} produced incorrect output at n={n}, trial={trial}"
            )
        records.append(ResultRecord(n, m, trial, algo, ledger, wall))
    return records, skips


def _shuffled_trials(n: int, config: ExperimentConfig) -> list[list[int]]:
    """The chained shuffled arrays for every trial at one length."""
    work = generate_array(n, config.min_value, config.max_value)
    out = []
    for trial in range(config.trial_count):
        work = list(work)
        fisher_yates_shuffle(work, trial_rng(config.seed, n, trial))
        out.append(work)
    return out


def _trial_task(args) -> tuple[list[ResultRecord], list[TrialSkip]]:
    values, trial, config = args
    return run_trial(values, trial, config)


def run_sweep(config: ExperimentConfig, jobs: int = 1) -> SweepResult:
    """Run the full grid; records come back in (n, trial, algorithm) order.

    With ``jobs > 1`` the (length, trial) cells are distributed over worker
    processes; the shuffles themselves are computed up front in the parent
    because each trial's array chains off the previous one.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    tasks = []
    for n in config.lengths():
        for trial, values in enumerate(_shuffled_trials(n, config)):
            tasks.append((values, trial, config))
    records: list[ResultRecord] = []
    skips: list[TrialSkip] = []
    if jobs == 1:
        results = map(_trial_task, tasks)
    else:
        executor = ProcessPoolExecutor(max_workers=jobs)
        try:
            results = list(executor.map(_trial_task, tasks, chunksize=4))
        finally:
            executor.shutdown()
    for recs, sks in results:
        records.extend(recs)
        skips.extend(sks)
    key = lambda r: (r.n, r.trial, ALGORITHM_ORDER[r.algorithm])
    records.sort(key=key)
    skips.sort(key=lambda s: (s.n, s.trial, ALGORITHM_ORDER[s.algorithm]))
    return SweepResult(records, skips)
