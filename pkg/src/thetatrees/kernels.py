"""Batch kernels over trees and sequence pairs stored as small-int arrays.

Every kernel comes in two independent implementations: a per-object loop
compiled with numba (``*_nb``) and a numpy version vectorised over the batch
axis (``*_np``). The public wrappers pick one according to
:data:`thetatrees._jit.USE_NUMBA`; both are importable for tests and
benchmarks.

Array conventions: a batch of ``M`` trees of size ``n`` is three ``(M, n)``
integer arrays ``parent, w, lv`` with vertex ``i + 1`` in column ``i`` and
parent ``0`` meaning the root.
"""

from __future__ import annotations

import numpy as np

from . import _jit
from ._jit import njit

if _jit.HAVE_NUMBA:
    from numba import prange
else:  # pragma: no cover
    prange = range

SMALL = np.int8


# -- shared scalar helpers ---------------------------------------------------


@njit(cache=True, inline="always")
def _compat(w1, l1, w2, l2):
    return (l1 < l2 and w1 < w2) or (l1 > l2 and w1 > w2)


@njit(cache=True, inline="always")
def _below(w1, l1, w2, l2):
    return w1 < w2 or (w1 == w2 and l1 > l2)


def _compat_np(w1, l1, w2, l2):
    return ((l1 < l2) & (w1 < w2)) | ((l1 > l2) & (w1 > w2))


def _below_np(w1, l1, w2, l2):
    return (w1 < w2) | ((w1 == w2) & (l1 > l2))


# -- one enumeration layer -----------------------------------------------------


@njit(cache=True)
def _extend_trees_pass(parent, w, lv, inv, max_label, max_level, zero_only,
                       out_parent, out_w, out_lv, out_inv, fill):
    m_rows, k = parent.shape
    count = 0
    branch = np.empty(k + 1, np.int64)
    for r in range(m_rows):
        blen = 0
        v = k
        while True:
            branch[blen] = v
            blen += 1
            if v == 0:
                break
            v = parent[r, v - 1]
        for d in range(blen):
            p = branch[d]
            sib = branch[d - 1] if d >= 1 else 0
            for x in range(1, max_label + 1):
                for y in range(1, max_level + 1):
                    if p != 0 and not _compat(x, y, w[r, p - 1], lv[r, p - 1]):
                        continue
                    if sib != 0 and not _below(x, y, w[r, sib - 1], lv[r, sib - 1]):
                        continue
                    c = 0
                    for e in range(d, blen - 1):
                        u = branch[e]
                        pu = branch[e + 1]
                        ok = True
                        if pu != 0:
                            ok = _compat(x, y, w[r, pu - 1], lv[r, pu - 1])
                        if ok and _below(x, y, w[r, u - 1], lv[r, u - 1]):
                            c += 1
                    if zero_only and c > 0:
                        continue
                    if fill:
                        for i in range(k):
                            out_parent[count, i] = parent[r, i]
                            out_w[count, i] = w[r, i]
                            out_lv[count, i] = lv[r, i]
                        out_parent[count, k] = p
                        out_w[count, k] = x
                        out_lv[count, k] = y
                        out_inv[count] = inv[r] + c
                    count += 1
    return count


def extend_trees_nb(parent, w, lv, inv, max_label, max_level, zero_only):
    m_rows, k = parent.shape
    empty = np.zeros((0, k + 1), SMALL)
    total = _extend_trees_pass(parent, w, lv, inv, max_label, max_level, zero_only,
                               empty, empty, empty, np.zeros(0, np.int64), False)
    out = [np.empty((total, k + 1), SMALL) for _ in range(3)]
    out_inv = np.empty(total, np.int64)
    _extend_trees_pass(parent, w, lv, inv, max_label, max_level, zero_only,
                       out[0], out[1], out[2], out_inv, True)
    return out[0], out[1], out[2], out_inv


def _with_root_column(a, root_value):
    return np.concatenate([np.full((a.shape[0], 1), root_value, np.int64), a.astype(np.int64)], axis=1)


def extend_trees_np(parent, w, lv, inv, max_label, max_level, zero_only):
    m_rows, k = parent.shape
    rows = np.arange(m_rows)
    par = _with_root_column(parent, -1)
    wr = _with_root_column(w, 0)
    lr = _with_root_column(lv, 0)

    # rightmost branch, bottom first, padded with -1 past the root
    branch = np.full((m_rows, k + 1), -1, np.int64)
    cur = np.full(m_rows, k, np.int64)
    for d in range(k + 1):
        branch[:, d] = cur
        cur = np.where(cur >= 0, par[rows, np.maximum(cur, 0)], -1)

    xs, ys = np.meshgrid(np.arange(1, max_label + 1), np.arange(1, max_level + 1), indexing="ij")
    xs, ys = xs.ravel()[None, :], ys.ravel()[None, :]

    def at(table, idx):
        return table[rows, np.maximum(idx, 0)][:, None]

    pieces = []
    for d in range(k + 1):
        p = branch[:, d]
        ok = np.broadcast_to((p >= 0)[:, None], (m_rows, xs.shape[1])).copy()
        ok &= (p == 0)[:, None] | _compat_np(xs, ys, at(wr, p), at(lr, p))
        if d >= 1:
            sib = branch[:, d - 1]
            ok &= _below_np(xs, ys, at(wr, sib), at(lr, sib))
        c = np.zeros(ok.shape, np.int64)
        for e in range(d, k):
            u, pu = branch[:, e], branch[:, e + 1]
            active = (u > 0)[:, None]
            comp = (pu == 0)[:, None] | _compat_np(xs, ys, at(wr, pu), at(lr, pu))
            c += active & comp & _below_np(xs, ys, at(wr, u), at(lr, u))
        if zero_only:
            ok &= c == 0
        r_sel, g_sel = np.nonzero(ok)
        pieces.append((
            np.concatenate([parent[r_sel], p[r_sel, None]], axis=1),
            np.concatenate([w[r_sel], xs[0, g_sel, None]], axis=1),
            np.concatenate([lv[r_sel], ys[0, g_sel, None]], axis=1),
            inv[r_sel] + c[r_sel, g_sel],
        ))
    return tuple(
        np.concatenate([piece[i] for piece in pieces]).astype(SMALL if i < 3 else np.int64)
        for i in range(4)
    )


# -- inversion counts (any storage order) --------------------------------------


@njit(cache=True, parallel=True)
def inv_counts_nb(parent, w, lv):
    m_rows, n = parent.shape
    out = np.zeros(m_rows, np.int64)
    for r in prange(m_rows):
        c = 0
        for v in range(1, n + 1):
            x = w[r, v - 1]
            y = lv[r, v - 1]
            u = parent[r, v - 1]
            while u != 0:
                pu = parent[r, u - 1]
                ok = True
                if pu != 0:
                    ok = _compat(x, y, w[r, pu - 1], lv[r, pu - 1])
                if ok and _below(x, y, w[r, u - 1], lv[r, u - 1]):
                    c += 1
                u = pu
        out[r] = c
    return out


def inv_counts_np(parent, w, lv):
    m_rows, n = parent.shape
    rows = np.arange(m_rows)
    par = _with_root_column(parent, 0)
    wr = _with_root_column(w, 0)
    lr = _with_root_column(lv, 0)
    out = np.zeros(m_rows, np.int64)
    for v in range(1, n + 1):
        x, y = wr[:, v], lr[:, v]
        u = par[:, v]
        for _ in range(n):
            active = u > 0
            if not active.any():
                break
            pu = par[rows, u]
            comp = (pu == 0) | _compat_np(x, y, wr[rows, pu], lr[rows, pu])
            out += active & comp & _below_np(x, y, wr[rows, u], lr[rows, u])
            u = np.where(active, pu, 0)
    return out


# -- exploration order -----------------------------------------------------------


@njit(cache=True, parallel=True)
def exploration_orders_nb(parent, w, lv):
    """Visit sequence (vertex ids) of the depth-first exploration of each tree."""
    m_rows, n = parent.shape
    out = np.zeros((m_rows, n), np.int64)
    for r in prange(m_rows):
        stack = np.empty(n + 1, np.int64)
        kids = np.empty(n, np.int64)
        top = 1
        stack[0] = 0
        pos = 0
        while top > 0:
            top -= 1
            v = stack[top]
            if v != 0:
                out[r, pos] = v
                pos += 1
            nk = 0
            for c in range(1, n + 1):
                if parent[r, c - 1] == v:
                    # insertion keeps kids sorted by (-w, lv, id)
                    j = nk
                    while j > 0:
                        o = kids[j - 1]
                        wo, wc = w[r, o - 1], w[r, c - 1]
                        if wo > wc or (wo == wc and lv[r, o - 1] <= lv[r, c - 1]):
                            break
                        kids[j] = o
                        j -= 1
                    kids[j] = c
                    nk += 1
            for j in range(nk - 1, -1, -1):
                stack[top] = kids[j]
                top += 1
    return out


def exploration_orders_np(parent, w, lv):
    """Same as the numba kernel, by sorting encoded root-to-vertex key paths."""
    m_rows, n = parent.shape
    if n == 0:
        return np.zeros((m_rows, 0), np.int64)
    rows = np.arange(m_rows)
    par = _with_root_column(parent, 0)
    wr = _with_root_column(w, 0)
    lr = _with_root_column(lv, 0)
    top_w, top_l = int(wr.max()), int(lr.max())
    # sibling key: label descending, level ascending (siblings of a valid tree never tie)
    key = (top_w - wr) * (top_l + 1) + lr
    base = int(key.max()) + 2
    if base ** n >= 2 ** 63:
        raise OverflowError("trees too large for the numpy exploration kernel")
    # depth of every vertex
    depth = np.zeros((m_rows, n + 1), np.int64)
    for v in range(1, n + 1):
        u = par[:, v]
        d = np.ones(m_rows, np.int64)
        for _ in range(n):
            d += u > 0
            u = par[rows, u]
        depth[:, v] = d
    code = np.zeros((m_rows, n), np.int64)
    for v in range(1, n + 1):
        u = np.full(m_rows, v)
        acc = np.zeros(m_rows, np.int64)
        for _ in range(n):
            active = u > 0
            digit = (key[rows, u] + 1) * np.power(base, np.maximum(n - depth[rows, u], 0))
            acc += np.where(active, digit, 0)
            u = par[rows, u]
        code[:, v - 1] = acc
    return np.argsort(code, axis=1, kind="stable") + 1


# -- inverse construction ------------------------------------------------------------


@njit(cache=True, parallel=True)
def psi_nb(a, b):
    """Parent arrays, labels and levels of the trees built from sequence pairs."""
    m_rows, n = a.shape
    parent = np.zeros((m_rows, n), SMALL)
    w = np.zeros((m_rows, n), SMALL)
    lv = np.zeros((m_rows, n), SMALL)
    for r in prange(m_rows):
        top = b[r, 0]
        bottom = b[r, 0]
        for i in range(n):
            top = max(top, b[r, i])
            bottom = min(bottom, b[r, i])
        for i in range(n):
            w[r, i] = a[r, n - 1 - i]
            lv[r, i] = top + bottom - b[r, n - 1 - i]
        branch = np.empty(n + 1, np.int64)
        branch[0] = 0
        blen = 1
        for k in range(1, n + 1):
            x = w[r, k - 1]
            y = lv[r, k - 1]
            s = blen - 1
            m = s
            for j in range(s):
                bj = branch[j]
                ok = True
                if bj != 0:
                    ok = _compat(x, y, w[r, bj - 1], lv[r, bj - 1])
                nxt = branch[j + 1]
                # k > nxt, so the index tie-break never favours k
                if ok and _below(x, y, w[r, nxt - 1], lv[r, nxt - 1]):
                    m = j
                    break
            parent[r, k - 1] = branch[m]
            branch[m + 1] = k
            blen = m + 2
    return parent, w, lv


def psi_np(a, b):
    m_rows, n = a.shape
    rows = np.arange(m_rows)
    a = a.astype(np.int64)
    b = b.astype(np.int64)
    wr = np.zeros((m_rows, n + 1), np.int64)
    lr = np.zeros((m_rows, n + 1), np.int64)
    if n:
        wr[:, 1:] = a[:, ::-1]
        lr[:, 1:] = (b.max(axis=1) + b.min(axis=1))[:, None] - b[:, ::-1]
    parent = np.zeros((m_rows, n), np.int64)
    branch = np.zeros((m_rows, n + 1), np.int64)
    blen = np.ones(m_rows, np.int64)
    for k in range(1, n + 1):
        x, y = wr[:, k], lr[:, k]
        s = blen - 1
        m = s.copy()
        found = np.zeros(m_rows, bool)
        for j in range(k - 1):
            bj, nxt = branch[:, j], branch[:, j + 1]
            comp = (bj == 0) | _compat_np(x, y, wr[rows, bj], lr[rows, bj])
            hit = (j < s) & ~found & comp & _below_np(x, y, wr[rows, nxt], lr[rows, nxt])
            m = np.where(hit, j, m)
            found |= hit
        parent[:, k - 1] = branch[rows, m]
        branch[rows, m + 1] = k
        blen = m + 2
    return parent.astype(SMALL), wr[:, 1:].astype(SMALL), lr[:, 1:].astype(SMALL)


# -- dispatch ----------------------------------------------------------------------

IMPLEMENTATIONS = {
    "numba": {
        "extend_trees": extend_trees_nb,
        "inv_counts": inv_counts_nb,
        "exploration_orders": exploration_orders_nb,
        "psi": psi_nb,
    },
    "numpy": {
        "extend_trees": extend_trees_np,
        "inv_counts": inv_counts_np,
        "exploration_orders": exploration_orders_np,
        "psi": psi_np,
    },
}


def get(name: str, backend: str | None = None):
    return IMPLEMENTATIONS[backend or _jit.backend()][name]


def extend_trees(parent, w, lv, inv, max_label, max_level, zero_only, backend=None):
    return get("extend_trees", backend)(parent, w, lv, inv, max_label, max_level, zero_only)


def inv_counts(parent, w, lv, backend=None):
    return get("inv_counts", backend)(parent, w, lv)


def exploration_orders(parent, w, lv, backend=None):
    return get("exploration_orders", backend)(parent, w, lv)


def psi_batch(a, b, backend=None):
    return get("psi", backend)(a, b)
