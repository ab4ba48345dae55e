"""Operation counters and the cost model shared by every sort in the package.

The contract, which every kernel in :mod:`qrsort.sort_core` and
:mod:`qrsort.baselines` follows exactly:

* every read or write of an element, key, counting bin, or auxiliary slot
  inside a sort is one array access (zero-initialising a counting bin is a
  write and counts);
* every two-element or element-key comparison is one comparison, including
  the min/max scan (one access per element, two comparisons per element
  after the first);
* every integer division is one division, every modulo one modulo, every
  shift or mask one bitwise op;
* index arithmetic, loop counters, and scalar O(1) setup (for example the
  single division that derives the quotient bound from the already-scanned
  extremes) are free.  This keeps the ``divisions`` counter equal to the
  number of per-element quotient-key divisions, so a bypassed quotient pass
  is visible as ``divisions == 0``.

Wall-clock time is recorded next to the counters by the harness but is
never part of an acceptance check; unit totals are the portable signal.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CostWeights:
    """Unit weights applied when collapsing a ledger to a single total."""

    access: int = 1
    compare: int = 1
    bitwise: int = 1
    div: int = 15
    mod: int = 15

    def __post_init__(self):
        for name in ("access", "compare", "bitwise", "div", "mod"):
            if getattr(self, name) < 1:
                raise ValueError(f"weight {name!r} must be >= 1")


DEFAULT_WEIGHTS = CostWeights()

# record() categories -> CostLedger attribute names
_CATEGORIES = {
    "access": "array_accesses",
    "compare": "comparisons",
    "div": "divisions",
    "mod": "modulos",
    "bitwise": "bitwise_ops",
}


@dataclass
class CostLedger:
    """Mutable counters for one sort invocation.

    ``counting_passes`` records the number of bins of each counting pass that
    ran, in order; it is observability plumbing (pass counts, bin totals) and
    takes part in neither :meth:`total_units` nor equality (the serialized
    schema carries the five counters only).
    """

    array_accesses: int = 0
    comparisons: int = 0
    divisions: int = 0
    modulos: int = 0
    bitwise_ops: int = 0
    counting_passes: list[int] = field(default_factory=list, compare=False)

    def record(self, category: str, count: int = 1) -> None:
        """Add ``count`` operations to one category.

        Counters never decrease within a sort invocation, so negative counts
        are rejected; a zero count is a no-op.
        """
        if category not in _CATEGORIES:
            raise ValueError(f"unknown cost category {category!r}")
        if count < 0:
            raise ValueError("count must be >= 0")
        attr = _CATEGORIES[category]
        setattr(self, attr, getattr(self, attr) + count)

    def total_units(self, weights: CostWeights = DEFAULT_WEIGHTS) -> int:
        return (
            weights.access * self.array_accesses
            + weights.compare * self.comparisons
            + weights.bitwise * self.bitwise_ops
            + weights.div * self.divisions
            + weights.mod * self.modulos
        )

    def snapshot(self) -> "CostLedger":
        """Independent copy, safe to keep after the ledger is reused."""
        return CostLedger(
            array_accesses=self.array_accesses,
            comparisons=self.comparisons,
            divisions=self.divisions,
            modulos=self.modulos,
            bitwise_ops=self.bitwise_ops,
            counting_passes=list(self.counting_passes),
        )
