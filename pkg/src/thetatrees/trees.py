"""Tiered rooted trees and forests.

Vertices are numbered ``1..n`` by storage position and vertex ``0`` is the
root. The root carries the formal pair ``(w, lv) = (0, 0)``; since every other
vertex has positive label and level, the root is compatible with all of them
and edges to the root never violate the tier conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .compositions import WeakComposition

ROOT = 0


class InvalidTreeError(ValueError):
    """Raised when an operation needs a valid tiered tree and gets something else."""


@dataclass(frozen=True)
class TieredRootedTree:
    parent: tuple[int, ...]
    w: tuple[int, ...]
    lv: tuple[int, ...]
    _children: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        parent = tuple(int(p) for p in self.parent)
        w = tuple(int(x) for x in self.w)
        lv = tuple(int(x) for x in self.lv)
        if not len(parent) == len(w) == len(lv):
            raise ValueError(
                f"parent/w/lv lengths differ: {len(parent)}, {len(w)}, {len(lv)}")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "lv", lv)
        kids = [[] for _ in range(len(parent) + 1)]
        for v, p in enumerate(parent, start=1):
            if 0 <= p <= len(parent):
                kids[p].append(v)
        object.__setattr__(self, "_children", tuple(tuple(k) for k in kids))

    @classmethod
    def from_pairs(cls, parent: Sequence[int], pairs: Sequence[tuple[int, int]]):
        return cls(parent, [p[0] for p in pairs], [p[1] for p in pairs])

    @property
    def n(self) -> int:
        return len(self.parent)

    def pair(self, v: int) -> tuple[int, int]:
        """``(w(v), lv(v))``, with ``(0, 0)`` for the root."""
        if v == ROOT:
            return (0, 0)
        return (self.w[v - 1], self.lv[v - 1])

    def p(self, v: int) -> int:
        return self.parent[v - 1]

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def ancestors(self, v: int) -> list[int]:
        """Strict ancestors of ``v`` from its parent up to and including the root."""
        out = []
        seen = 0
        while v != ROOT:
            v = self.parent[v - 1]
            out.append(v)
            seen += 1
            if seen > self.n:
                raise InvalidTreeError("parent array contains a cycle")
        return out

    def is_descendant(self, v: int, u: int) -> bool:
        """True iff ``v`` is a strict descendant of ``u``."""
        return v != u and u in self.ancestors(v)

    def depth(self, v: int) -> int:
        return len(self.ancestors(v))

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} is not a non-root vertex of a tree with n={self.n}")

    def text(self) -> str:
        """Canonical one-line form ``parent;w;lv``."""
        return ";".join(",".join(map(str, xs)) for xs in (self.parent, self.w, self.lv))

    @classmethod
    def from_text(cls, line: str) -> "TieredRootedTree":
        fields = line.strip().split(";")
        if len(fields) != 3:
            raise ValueError(f"expected 'parent;w;lv', got {line!r}")
        parent, w, lv = ([int(x) for x in f.split(",")] if f else [] for f in fields)
        return cls(parent, w, lv)

    def to_dict(self) -> dict:
        return {"n": self.n, "parent": list(self.parent), "w": list(self.w), "lv": list(self.lv)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "TieredRootedTree":
        tree = cls(data["parent"], data["w"], data["lv"])
        if "n" in data and int(data["n"]) != tree.n:
            raise ValueError(f"declared n={data['n']} but arrays have length {tree.n}")
        return tree


@dataclass(frozen=True)
class TieredRootedForest:
    """A tiered rooted forest; ``parent[i]`` is None for component roots."""

    parent: tuple[int | None, ...]
    w: tuple[int, ...]
    lv: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(None if p is None else int(p) for p in self.parent))
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        object.__setattr__(self, "lv", tuple(int(x) for x in self.lv))
        if not len(self.parent) == len(self.w) == len(self.lv):
            raise ValueError("parent/w/lv lengths differ")

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent, start=1) if p is None)


def forest_to_tree(forest: TieredRootedForest) -> TieredRootedTree:
    """Attach every component root to a new root vertex 0."""
    return TieredRootedTree([ROOT if p is None else p for p in forest.parent], forest.w, forest.lv)


def tree_to_forest(tree: TieredRootedTree) -> TieredRootedForest:
    """Remove the root; its former children become component roots."""
    return TieredRootedForest([None if p == ROOT else p for p in tree.parent], tree.w, tree.lv)


def forest_tree_convert(x):
    if isinstance(x, TieredRootedForest):
        return forest_to_tree(x)
    if isinstance(x, TieredRootedTree):
        return tree_to_forest(x)
    raise TypeError(f"expected a tiered rooted tree or forest, got {type(x).__name__}")


def compatible(u: tuple[int, int], v: tuple[int, int]) -> bool:
    """Compatibility of two ``(w, lv)`` pairs: label order and level order strictly agree."""
    return (u[1] < v[1] and u[0] < v[0]) or (u[1] > v[1] and u[0] > v[0])


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: int  # 1, 2 or 3
    u: int
    v: int

    def __str__(self):
        return f"condition {self.condition} violated by vertices ({self.u}, {self.v})"


@dataclass(frozen=True)
class Verdict:
    violations: tuple = ()
    structural: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations and not self.structural

    def __bool__(self):
        return self.ok

    def messages(self) -> list[str]:
        return list(self.structural) + [str(v) for v in self.violations]


def _structural_errors(parent, w, lv) -> list[str]:
    n = len(parent)
    errors = []
    if not len(parent) == len(w) == len(lv):
        return [f"parent/w/lv lengths differ: {len(parent)}, {len(w)}, {len(lv)}"]
    for v, p in enumerate(parent, start=1):
        if not 0 <= p <= n:
            errors.append(f"vertex {v} has out-of-range parent {p}")
        elif p == v:
            errors.append(f"vertex {v} is its own parent")
    for name, xs in (("w", w), ("lv", lv)):
        for v, x in enumerate(xs, start=1):
            if x < 1:
                errors.append(f"{name}({v}) = {x} is not a positive integer")
    if errors:
        return errors
    # every vertex must reach the root
    state = [0] * (n + 1)  # 0 unknown, 1 on stack, 2 reaches root
    state[0] = 2
    for start in range(1, n + 1):
        trail = []
        v = start
        while state[v] == 0:
            state[v] = 1
            trail.append(v)
            v = parent[v - 1]
        if state[v] == 1:
            errors.append(f"parent array has a cycle through vertex {v}")
            for x in trail:
                state[x] = 3
        else:
            good = 2 if state[v] == 2 else 3
            for x in trail:
                state[x] = good
    return errors


def validate_tree(candidate) -> Verdict:
    """Check a tree (or a raw ``{"parent", "w", "lv"}`` record) against the tier conditions.

    Structural defects (lengths, ranges, cycles) are reported separately from
    violations of the three tier conditions; the latter are only checked once
    the parent array describes a genuine tree.
    """
    if isinstance(candidate, Mapping):
        parent, w, lv = candidate["parent"], candidate["w"], candidate["lv"]
    else:
        parent, w, lv = candidate.parent, candidate.w, candidate.lv
    parent, w, lv = list(parent), list(w), list(lv)
    structural = _structural_errors(parent, w, lv)
    if structural:
        return Verdict(structural=tuple(structural))

    violations = []
    for v, p in enumerate(parent, start=1):
        if p == ROOT:
            continue
        wu, lu, wv, lvv = w[p - 1], lv[p - 1], w[v - 1], lv[v - 1]
        if wu == wv or lu == lvv:
            violations.append(Violation(1, p, v))
        elif (wu < wv) != (lu < lvv):
            violations.append(Violation(2, p, v))
    by_parent: dict[int, list[int]] = {}
    for v, p in enumerate(parent, start=1):
        by_parent.setdefault(p, []).append(v)
    for kids in by_parent.values():
        for i, u in enumerate(kids):
            for v in kids[i + 1:]:
                if (w[u - 1], lv[u - 1]) == (w[v - 1], lv[v - 1]):
                    violations.append(Violation(3, u, v))
    return Verdict(violations=tuple(violations))


def require_valid(tree: TieredRootedTree):
    verdict = validate_tree(tree)
    if not verdict.ok:
        raise InvalidTreeError("; ".join(verdict.messages()))


# -- statistics ------------------------------------------------------------


def _smaller(v: tuple[int, int], u: tuple[int, int]) -> bool:
    """Inversion condition (iii): v is below u in (label, reversed level) order."""
    return v[0] < u[0] or (v[0] == u[0] and v[1] > u[1])


def is_inversion(tree: TieredRootedTree, u: int, v: int) -> bool:
    tree._check_vertex(u)
    tree._check_vertex(v)
    if not tree.is_descendant(v, u):
        return False
    pv = tree.pair(v)
    return compatible(pv, tree.pair(tree.p(u))) and _smaller(pv, tree.pair(u))


def inversions(tree: TieredRootedTree) -> list[tuple[int, int]]:
    """All inversions ``(u, v)`` of the tree, ordered by ``v`` then by depth of ``u``."""
    out = []
    for v in range(1, tree.n + 1):
        pv = tree.pair(v)
        u = tree.p(v)
        while u != ROOT:
            pu_parent = tree.p(u)
            if compatible(pv, tree.pair(pu_parent)) and _smaller(pv, tree.pair(u)):
                out.append((u, v))
            u = pu_parent
    return out


def inv_count(tree: TieredRootedTree) -> int:
    return len(inversions(tree))


def label_composition(tree) -> WeakComposition:
    return WeakComposition.from_values(tree.w)


def level_composition(tree) -> WeakComposition:
    return WeakComposition.from_values(tree.lv)


def reverse_level(tree: TieredRootedTree, v: int) -> int:
    """``L + l - lv(v)`` where L and l are the extreme levels of the tree."""
    if tree.n == 0:
        raise ValueError("reverse level is undefined for the root-only tree")
    tree._check_vertex(v)
    return max(tree.lv) + min(tree.lv) - tree.lv[v - 1]


def shift_levels(tree: TieredRootedTree, c: int) -> TieredRootedTree:
    return TieredRootedTree(tree.parent, tree.w, [x + c for x in tree.lv])


# -- the total order -------------------------------------------------------


def _sibling_precedes(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] or (a[0] == b[0] and a[1] > b[1])


def precedes(tree: TieredRootedTree, u: int, v: int) -> bool:
    """Strict total order on non-root vertices used to read trees.

    Distinct pairs compare by label, then by larger level first. Equal pairs
    compare ancestor-first, and otherwise by the two children of their least
    common ancestor that lie on the way to ``u`` and ``v``.
    """
    tree._check_vertex(u)
    tree._check_vertex(v)
    if u == v:
        return False
    pu, pv = tree.pair(u), tree.pair(v)
    if pu != pv:
        return _sibling_precedes(pu, pv)
    up_u = [u] + tree.ancestors(u)
    up_v = [v] + tree.ancestors(v)
    if u in up_v:
        return True
    if v in up_u:
        return False
    common = set(up_u)
    b = next(i for i, x in enumerate(up_v) if x in common)
    a = up_u.index(up_v[b])
    return _sibling_precedes(tree.pair(up_v[b - 1]), tree.pair(up_u[a - 1]))


def exploration_sequence(tree: TieredRootedTree) -> tuple[int, ...]:
    """Depth-first visit order: children by decreasing label, then increasing level.

    Ties (only possible in trees breaking condition 3) fall back to storage order.
    """
    order = []
    stack = [ROOT]
    while stack:
        v = stack.pop()
        if v != ROOT:
            order.append(v)
        kids = sorted(tree.children(v), key=lambda c: (-tree.w[c - 1], tree.lv[c - 1], c))
        stack.extend(reversed(kids))
    return tuple(order)


def relabel(tree: TieredRootedTree, order: Sequence[int]) -> TieredRootedTree:
    """Renumber vertices so that ``order[i]`` becomes vertex ``i + 1``."""
    new_id = {old: new for new, old in enumerate(order, start=1)}
    new_id[ROOT] = ROOT
    parent = [new_id[tree.p(old)] for old in order]
    return TieredRootedTree(parent, [tree.w[v - 1] for v in order], [tree.lv[v - 1] for v in order])


def canonical(tree: TieredRootedTree) -> TieredRootedTree:
    """Storage with vertices numbered in exploration order.

    Two valid trees are isomorphic (as rooted trees with labels and levels)
    iff their canonical forms are equal.
    """
    return relabel(tree, exploration_sequence(tree))


def is_canonical(tree: TieredRootedTree) -> bool:
    return exploration_sequence(tree) == tuple(range(1, tree.n + 1))


# -- enumeration -----------------------------------------------------------


def _shapes(n: int) -> Iterator[tuple[int, ...]]:
    """Preorder parent arrays in lexicographic order.

    Vertex ``k + 1`` hangs off the rightmost branch of the tree on ``0..k``.
    """
    parent = [0] * n
    right = [0]  # rightmost branch, root first

    def rec(k):
        if k == n:
            yield tuple(parent)
            return
        saved = list(right)
        for depth in range(len(saved)):
            parent[k] = saved[depth]
            right[:] = saved[: depth + 1] + [k + 1]
            yield from rec(k + 1)
        right[:] = saved

    yield from rec(0)


def _prev_siblings(parent: Sequence[int]) -> list[int]:
    last = {}
    prev = []
    for v, p in enumerate(parent, start=1):
        prev.append(last.get(p, 0))
        last[p] = v
    return prev


def enumerate_trees(n: int, max_label: int | None = None, max_level: int | None = None,
                    zero_only: bool = False) -> Iterator[TieredRootedTree]:
    """Every tiered rooted tree on ``n`` non-root vertices, once each.

    Trees are emitted in canonical storage, ordered lexicographically by
    ``(parent, w, lv)``. Labels range over ``[max_label]`` and levels over
    ``[max_level]`` (both default to ``n``). Partial assignments are pruned as
    soon as they break a tier condition, break the canonical sibling order, or
    (with ``zero_only``) contain an inversion.
    """
    max_label = max(n, 1) if max_label is None else max_label
    max_level = max(n, 1) if max_level is None else max_level
    if max_label < 1 or max_level < 1:
        raise ValueError("label and level bounds must be positive")
    if n == 0:
        yield TieredRootedTree((), (), ())
        return

    for parent in _shapes(n):
        prev = _prev_siblings(parent)
        w = [0] * n
        lv = [0] * n
        anc = [[]]  # anc[v]: non-root strict ancestors of v, nearest first
        for v, p in enumerate(parent, start=1):
            anc.append(([p] + anc[p]) if p else [])

        def labels(k):
            if k == n:
                yield from levels(0)
                return
            p, s = parent[k], prev[k]
            hi = w[s - 1] if s else max_label
            for x in range(1, hi + 1):
                if p and x == w[p - 1]:
                    continue
                w[k] = x
                yield from labels(k + 1)

        def levels(k):
            if k == n:
                yield TieredRootedTree(parent, w, lv)
                return
            p, s, x = parent[k], prev[k], w[k]
            lo = lv[s - 1] + 1 if s and w[s - 1] == x else 1
            for y in range(lo, max_level + 1):
                if p and not compatible((x, y), (w[p - 1], lv[p - 1])):
                    continue
                if zero_only and _creates_inversion(x, y, anc[k + 1], parent, w, lv):
                    continue
                lv[k] = y
                yield from levels(k + 1)

        yield from labels(0)


def _creates_inversion(x, y, ancestors, parent, w, lv) -> bool:
    for u in ancestors:
        pu = parent[u - 1]
        above = (0, 0) if pu == ROOT else (w[pu - 1], lv[pu - 1])
        if compatible((x, y), above) and _smaller((x, y), (w[u - 1], lv[u - 1])):
            return True
    return False
