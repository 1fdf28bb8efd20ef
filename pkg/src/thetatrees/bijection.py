"""Bijection between zero-inversion tiered trees and area-zero labelled paths.

``phi`` reads a tree in exploration order and records (label, reverse level)
of the vertices last-visited first. ``psi`` rebuilds the tree from the pair of
sequences by hanging each new vertex on the rightmost branch built so far.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import WeakComposition, rev
from .dyck import DomainError, SequencePair
from .trees import (
    ROOT,
    TieredRootedTree,
    compatible,
    exploration_sequence,
    inv_count,
    precedes,
    require_valid,
)

__all__ = [
    "ExplorationOrder",
    "exploration_order",
    "phi",
    "psi",
    "psi_steps",
    "orders_agree_check",
    "construction_precedes",
    "rev",
    "WeakComposition",
]


@dataclass(frozen=True)
class ExplorationOrder:
    order: tuple[int, ...]

    def position(self) -> dict[int, int]:
        """Map vertex id to its 1-based visit index."""
        return {v: i for i, v in enumerate(self.order, start=1)}

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)


def exploration_order(tree: TieredRootedTree) -> ExplorationOrder:
    """Depth-first order, children by decreasing label and then increasing level."""
    return ExplorationOrder(exploration_sequence(tree))


def phi(tree: TieredRootedTree) -> SequencePair:
    """Map a zero-inversion tree to its sequence pair.

    Raises DomainError when the tree has inversions and InvalidTreeError when
    it is not a tiered tree at all.
    """
    require_valid(tree)
    if tree.n == 0:
        return SequencePair((), ())
    k = inv_count(tree)
    if k:
        raise DomainError(f"tree has {k} inversion(s); the map is only defined on inv = 0")
    order = exploration_sequence(tree)
    top, bottom = max(tree.lv), min(tree.lv)
    last_first = order[::-1]
    return SequencePair(
        [tree.w[v - 1] for v in last_first],
        [top + bottom - tree.lv[v - 1] for v in last_first],
    )


def construction_precedes(tree: TieredRootedTree, i: int, j: int) -> bool:
    """Order on vertices by (label, larger level first, smaller index first)."""
    wi, li = tree.w[i - 1], tree.lv[i - 1]
    wj, lj = tree.w[j - 1], tree.lv[j - 1]
    return wi < wj or (wi == wj and (li > lj or (li == lj and i < j)))


def psi_steps(sp: SequencePair):
    """Run the inverse construction, yielding ``(k, parent_of_k, branch)`` per step.

    ``branch`` is the rightmost branch (root first) that vertex ``k`` was
    attached to. The final tree is :func:`psi` of the same input.
    """
    n = sp.n
    if n == 0:
        return
    top, bottom = max(sp.b), min(sp.b)
    w = [sp.a[n - i] for i in range(1, n + 1)]
    lv = [top + bottom - sp.b[n - i] for i in range(1, n + 1)]

    def pair(v):
        return (0, 0) if v == ROOT else (w[v - 1], lv[v - 1])

    def star(i, j):
        return w[i - 1] < w[j - 1] or (w[i - 1] == w[j - 1] and (
            lv[i - 1] > lv[j - 1] or (lv[i - 1] == lv[j - 1] and i < j)))

    branch = [ROOT]
    for k in range(1, n + 1):
        s = len(branch) - 1
        m = s
        for j in range(s):
            if compatible(pair(k), pair(branch[j])) and star(k, branch[j + 1]):
                m = j
                break
        yield k, branch[m], tuple(branch)
        branch = branch[: m + 1] + [k]


def psi(sp: SequencePair) -> TieredRootedTree:
    """Build the zero-inversion tree whose sequence pair is ``sp``.

    Vertex ``i`` of the result carries ``(a[n - i], L + l - b[n - i])`` with
    ``L``/``l`` the extremes of ``b``, so vertices are numbered in the order
    the construction adds them.
    """
    n = sp.n
    if n == 0:
        return TieredRootedTree((), (), ())
    top, bottom = max(sp.b), min(sp.b)
    parent = [0] * n
    for k, p, _ in psi_steps(sp):
        parent[k - 1] = p
    return TieredRootedTree(
        parent,
        [sp.a[n - i] for i in range(1, n + 1)],
        [top + bottom - sp.b[n - i] for i in range(1, n + 1)],
    )


def orders_agree_check(tree: TieredRootedTree) -> bool:
    """True iff the index-based construction order equals the tree's total order."""
    vs = range(1, tree.n + 1)
    return all(
        construction_precedes(tree, i, j) == precedes(tree, i, j)
        for i in vs for j in vs if i != j
    )
