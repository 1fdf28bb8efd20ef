"""Naive reference implementations, written straight from the definitions.

Nothing here imports from ``thetatrees``: these are the independent side of
every oracle comparison in the suite.
"""

from itertools import product


def pair_of(parent, w, lv, v):
    return (0, 0) if v == 0 else (w[v - 1], lv[v - 1])


def ancestors(parent, v):
    out = []
    while v != 0:
        v = parent[v - 1]
        out.append(v)
    return out


def is_forest_parent_array(parent):
    n = len(parent)
    for v in range(1, n + 1):
        seen = set()
        while v != 0:
            if v in seen or not 0 <= parent[v - 1] <= n:
                return False
            seen.add(v)
            v = parent[v - 1]
    return True


def naive_valid(parent, w, lv):
    """Condition-by-condition check of the tier conditions."""
    n = len(parent)
    edges = [(parent[v - 1], v) for v in range(1, n + 1) if parent[v - 1] != 0]
    for u, v in edges:
        if w[u - 1] == w[v - 1] or lv[u - 1] == lv[v - 1]:
            return False
        if (w[u - 1] < w[v - 1]) != (lv[u - 1] < lv[v - 1]):
            return False
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and parent[u - 1] == parent[v - 1]:
                if (w[u - 1], lv[u - 1]) == (w[v - 1], lv[v - 1]):
                    return False
    return True


def comp(a, b):
    return (a[1] < b[1] and a[0] < b[0]) or (a[1] > b[1] and a[0] > b[0])


def naive_inversions(parent, w, lv):
    n = len(parent)
    out = []
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v or u not in ancestors(parent, v):
                continue
            pu, pv = pair_of(parent, w, lv, u), pair_of(parent, w, lv, v)
            above = pair_of(parent, w, lv, parent[u - 1])
            if comp(pv, above) and (pv[0] < pu[0] or (pv[0] == pu[0] and pv[1] > pu[1])):
                out.append((u, v))
    return out


def encode(parent, w, lv, v=0):
    """Isomorphism-invariant nested-tuple encoding of the subtree at ``v``."""
    kids = [c for c in range(1, len(parent) + 1) if parent[c - 1] == v]
    return (pair_of(parent, w, lv, v), tuple(sorted(encode(parent, w, lv, c) for c in kids)))


def naive_trees(n, max_label, max_level, zero_only=False):
    """Map encoding -> (parent, w, lv, inv) over all parent arrays and all labellings."""
    found = {}
    pairs = list(product(range(1, max_label + 1), range(1, max_level + 1)))
    for parent in product(range(n + 1), repeat=n):
        if any(parent[v - 1] == v for v in range(1, n + 1)) or not is_forest_parent_array(parent):
            continue
        for labelling in product(pairs, repeat=n):
            w = [p[0] for p in labelling]
            lv = [p[1] for p in labelling]
            if not naive_valid(parent, w, lv):
                continue
            inv = len(naive_inversions(parent, w, lv))
            if zero_only and inv:
                continue
            found.setdefault(encode(parent, w, lv), (list(parent), w, lv, inv))
    return found


def dyck_words_naive(n):
    for word in product("NE", repeat=2 * n):
        if word.count("N") != n:
            continue
        h = 0
        ok = True
        for s in word:
            h += 1 if s == "N" else -1
            ok &= h >= 0
        if ok:
            yield "".join(word)


def shoelace_area(steps):
    """Cells strictly between the path and the diagonal via the polygon area.

    The region between path and diagonal has area A = area + n / 2 (each
    diagonal cell contributes a half-square triangle).
    """
    pts = [(0, 0)]
    x = y = 0
    for s in steps:
        if s == "N":
            y += 1
        else:
            x += 1
        pts.append((x, y))
    # close along the diagonal back to the origin
    twice = 0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + [pts[0]]):
        twice += x1 * y2 - x2 * y1
    n = len(steps) // 2
    doubled = abs(twice) - n  # twice the area, minus n half-cells
    assert doubled % 2 == 0
    return doubled // 2


def east_on_line(steps, i):
    y = 0
    count = 0
    for s in steps:
        if s == "N":
            y += 1
        elif y == i:
            count += 1
    return count


def naive_paths(n, max_label, area_zero=False):
    """Set of (steps, pix, piy) for every 2-labelled Dyck path."""
    out = set()
    for steps in dyck_words_naive(n):
        if area_zero and shoelace_area(steps) != 0:
            continue
        for pix in product(range(1, max_label + 1), repeat=n):
            for piy in product(range(1, max_label + 1), repeat=n):
                if all(east_on_line(steps, i) >= (pix[i] <= pix[i - 1]) + (piy[i] <= piy[i - 1])
                       for i in range(1, n)):
                    out.add((steps, pix, piy))
    return out


def counts_vector(values, size):
    return tuple(sum(1 for x in values if x == i) for i in range(1, size + 1))


def naive_tree_sum(n, bound, zero_only=False):
    """{(q, alpha, beta): coefficient} summed over the naive tree family."""
    acc = {}
    for parent, w, lv, inv in naive_trees(n, bound, bound, zero_only).values():
        key = (inv, counts_vector(w, bound), counts_vector(lv, bound))
        acc[key] = acc.get(key, 0) + 1
    return acc


def naive_path_sum(n, bound, zero_only=False):
    acc = {}
    for steps, pix, piy in naive_paths(n, bound, zero_only):
        key = (shoelace_area(steps), counts_vector(pix, bound), counts_vector(piy, bound))
        acc[key] = acc.get(key, 0) + 1
    return acc
