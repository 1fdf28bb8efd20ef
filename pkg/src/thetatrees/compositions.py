"""Weak compositions: finitely supported maps from positive integers to counts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class WeakComposition:
    """A weak composition stored as ``entries[i - 1] = beta_i``.

    Trailing zeros are stripped on construction, so two compositions compare
    equal exactly when they agree at every index.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if any(e < 0 for e in entries):
            raise ValueError(f"negative entry in weak composition {entries}")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "WeakComposition":
        """Count occurrences: entry ``i`` is the number of values equal to ``i``."""
        counts = Counter(values)
        if not counts:
            return cls()
        if min(counts) < 1:
            raise ValueError("values must be positive integers")
        return cls(tuple(counts.get(i, 0) for i in range(1, max(counts) + 1)))

    def __getitem__(self, i: int) -> int:
        if i < 1:
            raise IndexError("weak compositions are indexed from 1")
        return self.entries[i - 1] if i <= len(self.entries) else 0

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def s(self) -> int | None:
        """Smallest index with a nonzero entry (None for the empty composition)."""
        for i, e in enumerate(self.entries, start=1):
            if e:
                return i
        return None

    @property
    def ell(self) -> int | None:
        """Largest index with a nonzero entry."""
        return len(self.entries) or None

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.entries):
            raise ValueError(f"composition {self} does not fit in {length} slots")
        return self.entries + (0,) * (length - len(self.entries))

    def rev(self) -> "WeakComposition":
        return rev(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def rev(beta: WeakComposition) -> WeakComposition:
    """Reflect ``beta`` within its support interval ``[s, ell]``.

    ``rev(beta)_i = beta_{s + ell - i}`` on the interval and 0 outside it, so
    the support interval is kept and ``rev`` is an involution.
    """
    if beta.weight == 0:
        return beta
    s, ell = beta.s, beta.ell
    return WeakComposition(tuple(beta[s + ell - i] if i >= s else 0 for i in range(1, ell + 1)))


def weak_compositions(n: int, parts: int):
    """All weak compositions of ``n`` with support in ``[parts]``, lexicographically."""
    if parts == 0:
        if n == 0:
            yield WeakComposition()
        return

    def rec(remaining, k):
        if k == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(remaining - first, k - 1):
                yield (first,) + rest

    for entries in rec(n, parts):
        yield WeakComposition(entries)
