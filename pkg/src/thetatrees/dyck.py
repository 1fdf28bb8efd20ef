"""2-labelled Dyck paths and their area-zero normal form, sequence pairs.

Steps are written as a string over ``N``/``E``. Labels ``pix``/``piy`` sit on
the north steps, bottom to top; row ``i`` is the line ``y = i`` between the
``i``-th and ``(i+1)``-th north steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .compositions import WeakComposition


class DomainError(ValueError):
    """An operation was applied outside the set it is defined on."""


@dataclass(frozen=True)
class LabelledDyckPath2:
    steps: str
    pix: tuple[int, ...]
    piy: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", str(self.steps).upper())
        object.__setattr__(self, "pix", tuple(int(x) for x in self.pix))
        object.__setattr__(self, "piy", tuple(int(x) for x in self.piy))
        if len(self.pix) != len(self.piy) or len(self.steps) != 2 * len(self.pix):
            raise ValueError(
                f"inconsistent lengths: {len(self.steps)} steps, "
                f"{len(self.pix)} and {len(self.piy)} labels")

    @property
    def n(self) -> int:
        return len(self.pix)

    def north_columns(self) -> list[int]:
        """x-coordinate of each north step, bottom to top."""
        cols, x = [], 0
        for s in self.steps:
            if s == "N":
                cols.append(x)
            else:
                x += 1
        return cols

    def east_counts(self) -> list[int]:
        """Number of east steps on each line ``y = i`` for ``i = 0..n``."""
        counts = [0] * (self.n + 1)
        y = 0
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                counts[y] += 1
        return counts

    def text(self) -> str:
        return ";".join([self.steps, ",".join(map(str, self.pix)), ",".join(map(str, self.piy))])

    def to_dict(self) -> dict:
        return {"n": self.n, "steps": self.steps, "pix": list(self.pix), "piy": list(self.piy)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "LabelledDyckPath2":
        path = cls(data["steps"], data["pix"], data["piy"])
        if "n" in data and int(data["n"]) != path.n:
            raise ValueError(f"declared n={data['n']} but path has size {path.n}")
        return path


@dataclass(frozen=True)
class SequencePair:
    """Pair of positive sequences where each step increases ``a`` or ``b``."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ValueError(f"sequence lengths differ: {len(a)} vs {len(b)}")
        if any(x < 1 for x in a + b):
            raise ValueError("sequence entries must be positive integers")
        bad = [i for i in range(1, len(a)) if not (a[i - 1] < a[i] or b[i - 1] < b[i])]
        if bad:
            raise ValueError(f"neither sequence increases at position(s) {bad}")

    @property
    def n(self) -> int:
        return len(self.a)

    def x_composition(self) -> WeakComposition:
        return WeakComposition.from_values(self.a)

    def y_composition(self) -> WeakComposition:
        return WeakComposition.from_values(self.b)

    def text(self) -> str:
        return ",".join(map(str, self.a)) + ";" + ",".join(map(str, self.b))

    def to_dict(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "SequencePair":
        return cls(data["a"], data["b"])


@dataclass(frozen=True)
class PathVerdict:
    bad_rows: tuple[int, ...] = ()
    structural: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.bad_rows and not self.structural

    def __bool__(self):
        return self.ok

    def messages(self) -> list[str]:
        return list(self.structural) + [f"row condition fails at row {i}" for i in self.bad_rows]


def validate_path(path) -> PathVerdict:
    if isinstance(path, Mapping):
        path = LabelledDyckPath2.from_dict(path)
    structural = []
    if set(path.steps) - {"N", "E"}:
        structural.append(f"step word {path.steps!r} uses letters other than N and E")
    elif path.steps.count("N") != path.n:
        structural.append(f"step word needs {path.n} N and {path.n} E steps")
    elif any(x < 1 for x in path.pix + path.piy):
        structural.append("labels must be positive integers")
    if structural:
        return PathVerdict(structural=tuple(structural))
    height = 0
    for s in path.steps:
        height += 1 if s == "N" else -1
        if height < 0:
            return PathVerdict(structural=("path goes below the diagonal",))
    east = path.east_counts()
    bad = []
    for i in range(1, path.n):
        need = (path.pix[i] <= path.pix[i - 1]) + (path.piy[i] <= path.piy[i - 1])
        if east[i] < need:
            bad.append(i)
    return PathVerdict(bad_rows=tuple(bad))


def area(path: LabelledDyckPath2) -> int:
    """Whole cells between the path and the diagonal, summed row by row."""
    return sum(row - col for row, col in enumerate(path.north_columns()))


def x_composition(path) -> WeakComposition:
    return WeakComposition.from_values(path.pix)


def y_composition(path) -> WeakComposition:
    return WeakComposition.from_values(path.piy)


def staircase(n: int) -> str:
    return "NE" * n


def to_sequence_pair(path: LabelledDyckPath2) -> SequencePair:
    if path.steps != staircase(path.n):
        raise DomainError(f"path has area {area(path)}; only area-0 paths are sequence pairs")
    return SequencePair(path.pix, path.piy)


def from_sequence_pair(sp: SequencePair) -> LabelledDyckPath2:
    return LabelledDyckPath2(staircase(sp.n), sp.a, sp.b)


# -- enumeration -----------------------------------------------------------


def dyck_words(n: int) -> Iterator[str]:
    """Dyck words of semilength ``n`` in lexicographic order with N < E."""

    def rec(prefix, north, east):
        if north == east == n:
            yield prefix
            return
        if north < n:
            yield from rec(prefix + "N", north + 1, east)
        if east < north:
            yield from rec(prefix + "E", north, east + 1)

    yield from rec("", 0, 0)


def _label_sequences(n, max_label, must_rise: Sequence[bool]) -> Iterator[tuple[int, ...]]:
    """Sequences in ``[max_label]^n``, lexicographic, strictly rising where required."""
    seq = [0] * n

    def rec(k):
        if k == n:
            yield tuple(seq)
            return
        lo = seq[k - 1] + 1 if k and must_rise[k] else 1
        for x in range(lo, max_label + 1):
            seq[k] = x
            yield from rec(k + 1)

    yield from rec(0)


def _labellings(n, max_label, east):
    """(pix, piy) pairs for a fixed path whose row ``i`` has ``east[i]`` east steps."""
    x_rise = [False] + [east[i] == 0 for i in range(1, n)]
    for pix in _label_sequences(n, max_label, x_rise):
        y_rise = [False] + [
            east[i] == 0 or (east[i] == 1 and pix[i] <= pix[i - 1]) for i in range(1, n)
        ]
        for piy in _label_sequences(n, max_label, y_rise):
            yield pix, piy


def enumerate_sequence_pairs(n: int, max_label: int | None = None) -> Iterator[SequencePair]:
    """All sequence pairs of length ``n`` with entries in ``[max_label]``, ordered by (a, b)."""
    max_label = max(n, 1) if max_label is None else max_label
    if n == 0:
        yield SequencePair((), ())
        return
    for a, b in _labellings(n, max_label, [1] * (n + 1)):
        yield SequencePair(a, b)


def enumerate_paths(n: int, max_label: int | None = None,
                    area_zero: bool = False) -> Iterator[LabelledDyckPath2]:
    """Every 2-labelled Dyck path of size ``n`` with labels in ``[max_label]``.

    Ordered lexicographically by (steps with N < E, pix, piy). With
    ``area_zero`` the staircase is the only step word and the paths come
    straight from :func:`enumerate_sequence_pairs`.
    """
    max_label = max(n, 1) if max_label is None else max_label
    if max_label < 1:
        raise ValueError("label bound must be positive")
    if area_zero:
        for sp in enumerate_sequence_pairs(n, max_label):
            yield from_sequence_pair(sp)
        return
    for steps in dyck_words(n):
        east = LabelledDyckPath2(steps, [1] * n, [1] * n).east_counts()
        for pix, piy in _labellings(n, max_label, east):
            yield LabelledDyckPath2(steps, pix, piy)


def sequence_pair_arrays(n: int, max_label: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """All sequence pairs as two ``(count, n)`` int8 arrays in (a, b) order."""
    max_label = max(n, 1) if max_label is None else max_label
    xs, ys = np.meshgrid(np.arange(1, max_label + 1), np.arange(1, max_label + 1), indexing="ij")
    xs, ys = xs.ravel().astype(np.int8), ys.ravel().astype(np.int8)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8), np.zeros((1, 0), dtype=np.int8)
    a, b = xs[:, None].copy(), ys[:, None].copy()
    for _ in range(1, n):
        ok = (a[:, -1:] < xs[None, :]) | (b[:, -1:] < ys[None, :])
        rows, choice = np.nonzero(ok)
        a = np.concatenate([a[rows], xs[choice, None]], axis=1)
        b = np.concatenate([b[rows], ys[choice, None]], axis=1)
    order = np.lexsort(tuple(b.T[::-1]) + tuple(a.T[::-1]))
    return a[order], b[order]


def path_arrays(n: int, max_label: int | None = None, area_zero: bool = False):
    """All paths as ``(word, pix, piy, areas)``; ``word`` indexes :func:`dyck_words`.

    Same set and order as :func:`enumerate_paths`.
    """
    max_label = max(n, 1) if max_label is None else max_label
    words = [staircase(n)] if area_zero else list(dyck_words(n))
    xs, ys = np.meshgrid(np.arange(1, max_label + 1), np.arange(1, max_label + 1), indexing="ij")
    xs, ys = xs.ravel().astype(np.int8), ys.ravel().astype(np.int8)
    out_word, out_x, out_y, out_area = [], [], [], []
    for index, steps in enumerate(words):
        probe = LabelledDyckPath2(steps, [1] * n, [1] * n)
        east = probe.east_counts()
        if n == 0:
            pix = piy = np.zeros((1, 0), np.int8)
        else:
            pix, piy = xs[:, None].copy(), ys[:, None].copy()
        for i in range(1, n):
            x_up = pix[:, -1:] < xs[None, :]
            y_up = piy[:, -1:] < ys[None, :]
            if east[i] == 0:
                ok = x_up & y_up
            elif east[i] == 1:
                ok = x_up | y_up
            else:
                ok = np.ones(x_up.shape, bool)
            rows, choice = np.nonzero(ok)
            pix = np.concatenate([pix[rows], xs[choice, None]], axis=1)
            piy = np.concatenate([piy[rows], ys[choice, None]], axis=1)
        order = np.lexsort(tuple(piy.T[::-1]) + tuple(pix.T[::-1])) if n else np.arange(1)
        out_word.append(np.full(len(order), index, np.int64))
        out_x.append(pix[order])
        out_y.append(piy[order])
        out_area.append(np.full(len(order), area(probe), np.int64))
    return (np.concatenate(out_word), np.concatenate(out_x),
            np.concatenate(out_y), np.concatenate(out_area))
