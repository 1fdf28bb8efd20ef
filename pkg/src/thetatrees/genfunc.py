"""Exact generating polynomials of both families and the comparison harness.

A term is ``coef * q^e * x^alpha * y^beta`` with ``alpha`` and ``beta`` dense
exponent vectors over ``n`` variables each. Coefficients are Python ints, so
arithmetic is exact. Variables beyond ``n`` are dropped: labels and levels are
enumerated in ``[n]``, which realises every weak composition of ``n`` with
support in ``[n]`` and so fixes any degree-``n`` identity in ``n`` variables.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import batch
from .compositions import WeakComposition, rev
from .dyck import area, enumerate_paths, path_arrays
from .trees import enumerate_trees, inv_count

Key = tuple  # (q exponent, x exponents, y exponents)

_TERM = re.compile(r"^\s*(-?\d+)\s+q\^(\d+)\s+x\^\[([\d,\s]*)\]\s+y\^\[([\d,\s]*)\]\s*$")


class GenPolynomial:
    """Sparse polynomial in ``q``, ``x_1..x_n`` and ``y_1..y_n`` with integer coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict | Iterable | None = None):
        self.n = int(n)
        self._terms: dict[Key, int] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for key, coef in items:
            self._add_term(self._key(*key), int(coef))

    def _key(self, q, x, y) -> Key:
        x, y = tuple(int(e) for e in x), tuple(int(e) for e in y)
        if len(x) < self.n:
            x += (0,) * (self.n - len(x))
        if len(y) < self.n:
            y += (0,) * (self.n - len(y))
        if len(x) != self.n or len(y) != self.n:
            raise ValueError(f"exponent vectors {x}, {y} do not fit {self.n} variables")
        if q < 0 or min(x + y, default=0) < 0:
            raise ValueError("exponents must be non-negative")
        return (int(q), x, y)

    def _add_term(self, key, coef):
        total = self._terms.get(key, 0) + coef
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)

    @classmethod
    def monomial(cls, n, q=0, x=(), y=(), coef=1) -> "GenPolynomial":
        return cls(n, {(q, tuple(x), tuple(y)): coef})

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Key, int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GenPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self):
        return f"GenPolynomial(n={self.n}, terms={len(self)})"

    def _check(self, other):
        if not isinstance(other, GenPolynomial):
            raise TypeError(f"cannot combine GenPolynomial with {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = GenPolynomial(self.n, self._terms)
        for key, coef in other._terms.items():
            out._add_term(key, coef)
        return out

    def __neg__(self):
        return GenPolynomial(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GenPolynomial(self.n, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        out = GenPolynomial(self.n)
        for (q1, x1, y1), c1 in self._terms.items():
            for (q2, x2, y2), c2 in other._terms.items():
                key = (q1 + q2, tuple(map(sum, zip(x1, x2))), tuple(map(sum, zip(y1, y2))))
                out._add_term(key, c1 * c2)
        return out

    __rmul__ = __mul__

    def coefficient(self, q=0, x=(), y=()) -> int:
        return self._terms.get(self._key(q, x, y), 0)

    def q_part(self, e: int) -> "GenPolynomial":
        """The ``q^e`` coefficient, kept as a polynomial with ``q`` exponent ``e``."""
        return GenPolynomial(self.n, {k: c for k, c in self._terms.items() if k[0] == e})

    def evaluate(self, q=1, x=None, y=None):
        x = [1] * self.n if x is None else list(x)
        y = [1] * self.n if y is None else list(y)
        total = 0
        for (e, xe, ye), c in self._terms.items():
            term = c * q ** e
            for base, exp in zip(x, xe):
                term *= base ** exp
            for base, exp in zip(y, ye):
                term *= base ** exp
            total += term
        return total

    def swap(self, family: str, i: int) -> "GenPolynomial":
        """Exchange variables ``i`` and ``i + 1`` (1-based) of family ``x`` or ``y``."""
        if family not in ("x", "y"):
            raise ValueError("family must be 'x' or 'y'")
        if not 1 <= i < self.n:
            raise ValueError(f"no adjacent pair ({i}, {i + 1}) among {self.n} variables")

        def flip(v):
            v = list(v)
            v[i - 1], v[i] = v[i], v[i - 1]
            return tuple(v)

        out = {}
        for (q, x, y), c in self._terms.items():
            key = (q, flip(x), y) if family == "x" else (q, x, flip(y))
            out[key] = c
        return GenPolynomial(self.n, out)

    def by_compositions(self) -> dict[tuple[WeakComposition, WeakComposition], int]:
        return {(WeakComposition(x), WeakComposition(y)): c for (_, x, y), c in self._terms.items()}

    # -- serialisation ---------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{c} q^{q} x^[{','.join(map(str, x))}] y^[{','.join(map(str, y))}]"
                 for (q, x, y), c in self]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "GenPolynomial":
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            m = _TERM.match(line)
            if not m:
                raise ValueError(f"cannot parse polynomial term {line!r}")
            c, q, x, y = m.groups()
            rows.append(((int(q), _ints(x), _ints(y)), int(c)))
        if n is None:
            n = len(rows[0][0][1]) if rows else 0
        return cls(n, rows)

    def to_dict(self) -> dict:
        return {"n": self.n,
                "terms": [{"coef": c, "q": q, "x": list(x), "y": list(y)} for (q, x, y), c in self]}

    @classmethod
    def from_dict(cls, data) -> "GenPolynomial":
        return cls(data["n"], [((t["q"], t["x"], t["y"]), t["coef"]) for t in data["terms"]])


def _ints(s: str) -> tuple[int, ...]:
    return tuple(int(t) for t in s.split(",") if t.strip())


def check_variable_symmetry(p: GenPolynomial, family: str) -> bool:
    """True iff ``p`` is unchanged by every adjacent transposition in ``family``."""
    return all(p.swap(family, i) == p for i in range(1, p.n))


# -- the two generating polynomials -----------------------------------------------


def _from_rows(n, q, x_counts, y_counts) -> GenPolynomial:
    if len(q) == 0:
        return GenPolynomial(n)
    rows = np.concatenate([q[:, None], x_counts, y_counts], axis=1)
    keys, counts = np.unique(rows, axis=0, return_counts=True)
    poly = GenPolynomial(n)
    for row, c in zip(keys.tolist(), counts.tolist()):
        poly._terms[(row[0], tuple(row[1:n + 1]), tuple(row[n + 1:]))] = c
    return poly


def tree_polynomial(n: int, max_label: int | None = None, max_level: int | None = None,
                    zero_only: bool = False, method: str = "batch") -> GenPolynomial:
    """Sum of ``q^inv(T) x^alpha(T) y^beta(T)`` over the enumerated trees.

    ``method="batch"`` runs the array kernels; ``"stream"`` walks the lazy
    enumerator one tree at a time.
    """
    max_label = max(n, 1) if max_label is None else max_label
    max_level = max(n, 1) if max_level is None else max_level
    nvars = max(n, max_label, max_level)
    if method == "stream":
        acc = Counter()
        for t in enumerate_trees(n, max_label, max_level, zero_only=zero_only):
            acc[(inv_count(t), WeakComposition.from_values(t.w).padded(nvars),
                 WeakComposition.from_values(t.lv).padded(nvars))] += 1
        return GenPolynomial(nvars, acc)
    if method != "batch":
        raise ValueError(f"unknown method {method!r}")
    parent, w, lv, inv = batch.tree_arrays(n, max_label, max_level, zero_only=zero_only)
    return _from_rows(nvars, inv, batch.composition_matrix(w, nvars),
                      batch.composition_matrix(lv, nvars))


def path_polynomial(n: int, max_label: int | None = None, zero_only: bool = False,
                    method: str = "batch") -> GenPolynomial:
    """Sum of ``q^area x^alpha y^beta`` over 2-labelled Dyck paths."""
    max_label = max(n, 1) if max_label is None else max_label
    nvars = max(n, max_label)
    if method == "stream":
        acc = Counter()
        for p in enumerate_paths(n, max_label, area_zero=zero_only):
            acc[(area(p), WeakComposition.from_values(p.pix).padded(nvars),
                 WeakComposition.from_values(p.piy).padded(nvars))] += 1
        return GenPolynomial(nvars, acc)
    if method != "batch":
        raise ValueError(f"unknown method {method!r}")
    _, pix, piy, areas = path_arrays(n, max_label, area_zero=zero_only)
    return _from_rows(nvars, areas, batch.composition_matrix(pix, nvars),
                      batch.composition_matrix(piy, nvars))


# -- verification reports -----------------------------------------------------------


@dataclass
class VerificationReport:
    n: int
    mode: str  # q0_theorem | full_conjecture | symmetry
    status: str  # pass | fail
    witness: dict | None = None
    counts: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


TRUNCATION_NOTE = "labels and levels restricted to [n]; n x-variables and n y-variables"


def _comp(v) -> str:
    return str(WeakComposition(v))


def verify_q0_theorem(n: int, tree_poly: GenPolynomial | None = None,
                      path_poly: GenPolynomial | None = None) -> VerificationReport:
    """Compare zero-inversion tree counts with area-zero path counts.

    For every ``(alpha, beta)`` the number of zero-inversion trees with label
    composition ``alpha`` and level composition ``beta`` must equal the number
    of area-zero paths with compositions ``(alpha, rev(beta))``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    tree_poly = tree_polynomial(n, zero_only=True) if tree_poly is None else tree_poly
    path_poly = path_polynomial(n, zero_only=True) if path_poly is None else path_poly
    nvars = max(tree_poly.n, path_poly.n)
    trees = {(WeakComposition(x), WeakComposition(y)): c
             for (q, x, y), c in tree_poly.terms.items() if q == 0}
    paths = {(WeakComposition(x), WeakComposition(y)): c
             for (q, x, y), c in path_poly.terms.items() if q == 0}
    keys = set(trees) | {(a, rev(b)) for a, b in paths}
    ordered = sorted(keys, key=lambda k: (k[0].padded(nvars), k[1].padded(nvars)))
    counts = {"pairs_checked": len(ordered), "trees": sum(trees.values()),
              "paths": sum(paths.values())}
    for alpha, beta in ordered:
        t, p = trees.get((alpha, beta), 0), paths.get((alpha, rev(beta)), 0)
        if t != p:
            witness = {"alpha": str(alpha), "beta": str(beta), "rev_beta": str(rev(beta)),
                       "trees": t, "paths": p}
            return VerificationReport(n, "q0_theorem", "fail", witness, counts, TRUNCATION_NOTE)
    return VerificationReport(n, "q0_theorem", "pass", None, counts, TRUNCATION_NOTE)


def verify_full_conjecture(n: int, tree_poly: GenPolynomial | None = None,
                           path_poly: GenPolynomial | None = None) -> VerificationReport:
    """Compare the full ``q, x, y`` polynomials of trees and paths.

    This is an open conjecture; a failing report records a counterexample
    monomial, it does not signal a defect in this package.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    tree_poly = tree_polynomial(n) if tree_poly is None else tree_poly
    path_poly = path_polynomial(n) if path_poly is None else path_poly
    diff = tree_poly - path_poly
    note = TRUNCATION_NOTE + "; open conjecture: a failure is a finding, not a bug"
    counts = {"tree_terms": len(tree_poly), "path_terms": len(path_poly),
              "trees": tree_poly.evaluate(), "paths": path_poly.evaluate()}
    if len(diff):
        (q, x, y), _ = next(iter(diff))
        witness = {"q": q, "alpha": _comp(x), "beta": _comp(y),
                   "trees": tree_poly.coefficient(q, x, y), "paths": path_poly.coefficient(q, x, y)}
        return VerificationReport(n, "full_conjecture", "fail", witness, counts, note)
    return VerificationReport(n, "full_conjecture", "pass", None, counts, note)


def verify_symmetry(n: int, path_poly: GenPolynomial | None = None,
                    tree_poly: GenPolynomial | None = None) -> VerificationReport:
    """Check that the path polynomial is symmetric in the x and in the y variables.

    The tree polynomial's symmetry is recorded in ``counts`` for information
    only; it is not part of the pass/fail status.
    """
    path_poly = path_polynomial(n) if path_poly is None else path_poly
    tree_poly = tree_polynomial(n) if tree_poly is None else tree_poly
    counts = {"path_terms": len(path_poly)}
    for family in ("x", "y"):
        counts[f"tree_symmetric_{family}"] = check_variable_symmetry(tree_poly, family)
    for family in ("x", "y"):
        for i in range(1, path_poly.n):
            swapped = path_poly.swap(family, i)
            if swapped != path_poly:
                (q, x, y), _ = next(iter(swapped - path_poly))
                witness = {"family": family, "transposition": [i, i + 1], "q": q,
                           "alpha": _comp(x), "beta": _comp(y)}
                return VerificationReport(n, "symmetry", "fail", witness, counts, TRUNCATION_NOTE)
    return VerificationReport(n, "symmetry", "pass", None, counts, TRUNCATION_NOTE)
