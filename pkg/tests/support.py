"""Shared helpers for the test suite: tagging, independent oracles."""

from __future__ import annotations


class Tagged(int):
    """An int carrying an identity tag; sorts must move it opaquely."""

    def __new__(cls, value: int, tag):
        obj = super().__new__(cls, value)
        obj.tag = tag
        return obj

    def __repr__(self):
        return f"Tagged({int(self)}, {self.tag!r})"


def tag_all(values) -> list[Tagged]:
    """Tag every element with its input position."""
    return [Tagged(v, i) for i, v in enumerate(values)]


def assert_stable_by_value(output: list[Tagged], n: int) -> None:
    """Output must be value-sorted with tags nondecreasing within ties."""
    assert len(output) == n
    for a, b in zip(output, output[1:]):
        assert int(a) <= int(b)
        if int(a) == int(b):
            assert a.tag < b.tag, f"ties reordered: {a!r} after {b!r}"


def stable_sort_by_key(items: list, keys: list[int]) -> list:
    """Oracle: stable reorder of items by external keys via (key, index)."""
    order = sorted(range(len(items)), key=lambda i: (keys[i], i))
    return [items[i] for i in order]


def insertion_sort(values: list) -> list:
    """Independent quadratic oracle; stable by construction."""
    out = []
    for v in values:
        i = len(out)
        while i > 0 and out[i - 1] > v:
            i -= 1
        out.insert(i, v)
    return out
