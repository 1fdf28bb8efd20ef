"""Array-level views of the enumerators and of the bijection.

These mirror the object APIs in :mod:`thetatrees.trees`,
:mod:`thetatrees.dyck` and :mod:`thetatrees.bijection` but move whole
families through the kernels at once.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .dyck import DomainError


def lex_sort(*columns_groups: np.ndarray) -> np.ndarray:
    """Row permutation sorting by the concatenation of the given 2-d arrays."""
    keys = []
    for group in reversed(columns_groups):
        keys.extend(group.T[::-1])
    if not keys:
        return np.arange(columns_groups[0].shape[0] if columns_groups else 0)
    return np.lexsort(tuple(keys))


def tree_arrays(n: int, max_label: int | None = None, max_level: int | None = None,
                zero_only: bool = False, backend: str | None = None):
    """All trees of size ``n`` as ``(parent, w, lv, inv)`` arrays.

    Rows are canonical storages sorted by ``(parent, w, lv)``, the same set and
    order as :func:`thetatrees.trees.enumerate_trees`.
    """
    max_label = max(n, 1) if max_label is None else max_label
    max_level = max(n, 1) if max_level is None else max_level
    if max_label < 1 or max_level < 1:
        raise ValueError("label and level bounds must be positive")
    if max(max_label, max_level, n) > 127:
        raise ValueError("array enumeration stores vertices, labels and levels as int8")
    parent = np.zeros((1, 0), kernels.SMALL)
    w = np.zeros((1, 0), kernels.SMALL)
    lv = np.zeros((1, 0), kernels.SMALL)
    inv = np.zeros(1, np.int64)
    for _ in range(n):
        parent, w, lv, inv = kernels.extend_trees(
            parent, w, lv, inv, max_label, max_level, zero_only, backend=backend)
    order = lex_sort(parent, w, lv)
    return parent[order], w[order], lv[order], inv[order]


def phi_arrays(parent, w, lv, backend: str | None = None, check: bool = True):
    """Sequence pairs ``(a, b)`` of a batch of zero-inversion trees."""
    if check:
        bad = np.nonzero(kernels.inv_counts(parent, w, lv, backend=backend))[0]
        if bad.size:
            raise DomainError(f"{bad.size} tree(s) have inversions, first at row {bad[0]}")
    m_rows, n = parent.shape
    if n == 0:
        return np.zeros((m_rows, 0), kernels.SMALL), np.zeros((m_rows, 0), kernels.SMALL)
    order = kernels.exploration_orders(parent, w, lv, backend=backend)[:, ::-1] - 1
    rows = np.arange(m_rows)[:, None]
    lv64 = lv.astype(np.int64)
    rlv = lv64.max(axis=1, keepdims=True) + lv64.min(axis=1, keepdims=True) - lv64
    return w[rows, order].astype(kernels.SMALL), rlv[rows, order].astype(kernels.SMALL)


def psi_arrays(a, b, backend: str | None = None):
    return kernels.psi_batch(a, b, backend=backend)


def composition_matrix(values: np.ndarray, parts: int) -> np.ndarray:
    """Row-wise value counts: column ``i - 1`` counts entries equal to ``i``."""
    m_rows = values.shape[0]
    if values.size and values.max() > parts:
        raise ValueError(f"values exceed {parts} parts")
    out = np.zeros((m_rows, parts + 1), np.int64)
    rows = np.repeat(np.arange(m_rows), values.shape[1])
    np.add.at(out, (rows, values.astype(np.int64).ravel()), 1)
    return out[:, 1:]


def rev_matrix(counts: np.ndarray) -> np.ndarray:
    """Row-wise reflection of each composition within its support interval."""
    m_rows, parts = counts.shape
    nz = counts > 0
    any_nz = nz.any(axis=1)
    s = np.where(any_nz, nz.argmax(axis=1), 0)
    ell = np.where(any_nz, parts - 1 - nz[:, ::-1].argmax(axis=1), -1)
    idx = np.arange(parts)[None, :]
    src = s[:, None] + ell[:, None] - idx
    inside = (idx >= s[:, None]) & (idx <= ell[:, None])
    rows = np.arange(m_rows)[:, None]
    return np.where(inside, counts[rows, np.clip(src, 0, parts - 1)], 0)
