"""The numba kernels and the numpy fallbacks must agree with each other and
with the plain-Python reference functions."""

import os
import subprocess
import sys

import numpy as np
import pytest

from thetatrees import _jit, batch, kernels
from thetatrees.bijection import phi, psi
from thetatrees.compositions import WeakComposition, rev
from thetatrees.dyck import SequencePair, enumerate_sequence_pairs, sequence_pair_arrays
from thetatrees.trees import TieredRootedTree, enumerate_trees, exploration_sequence, inv_count

BACKENDS = ["numba", "numpy"] if _jit.HAVE_NUMBA else ["numpy"]


def as_trees(parent, w, lv):
    return [TieredRootedTree(p, x, y) for p, x, y in zip(parent.tolist(), w.tolist(), lv.tolist())]


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n, label, level, zero_only", [
    (1, 1, 1, False), (2, 2, 2, False), (3, 3, 3, False), (3, 3, 3, True),
    (3, 2, 4, False), (4, 4, 4, True), (4, 3, 3, False),
])
def test_tree_arrays_match_stream(backend, n, label, level, zero_only):
    parent, w, lv, inv = batch.tree_arrays(n, label, level, zero_only, backend=backend)
    stream = list(enumerate_trees(n, label, level, zero_only=zero_only))
    assert as_trees(parent, w, lv) == stream
    assert inv.tolist() == [inv_count(t) for t in stream]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_backends_agree_on_every_kernel(n):
    if len(BACKENDS) < 2:
        pytest.skip("numba not installed")
    parent, w, lv, _ = batch.tree_arrays(n, backend="numpy")
    for name, args in [
        ("inv_counts", (parent, w, lv)),
        ("exploration_orders", (parent, w, lv)),
    ]:
        out_nb = kernels.get(name, "numba")(*args)
        out_np = kernels.get(name, "numpy")(*args)
        np.testing.assert_array_equal(out_nb, out_np)
    a, b = sequence_pair_arrays(n)
    for x, y in zip(kernels.psi_nb(a, b), kernels.psi_np(a, b)):
        np.testing.assert_array_equal(x, y)
    seed = (parent[:50], w[:50], lv[:50], np.zeros(min(50, len(parent)), np.int64))
    # row order of a single extension step is backend-specific; compare as sets
    ext_nb = kernels.extend_trees_nb(*seed, n, n, False)
    ext_np = kernels.extend_trees_np(*seed, n, n, False)
    o_nb, o_np = batch.lex_sort(*ext_nb[:3]), batch.lex_sort(*ext_np[:3])
    for x, y in zip(ext_nb, ext_np):
        np.testing.assert_array_equal(x[o_nb], y[o_np])


@pytest.mark.parametrize("backend", BACKENDS)
def test_exploration_orders_match_reference(backend):
    parent, w, lv, _ = batch.tree_arrays(4, 3, 4, backend=backend)
    orders = kernels.exploration_orders(parent, w, lv, backend=backend)
    for t, row in zip(as_trees(parent, w, lv), orders.tolist()):
        assert tuple(row) == exploration_sequence(t)


@pytest.mark.parametrize("backend", BACKENDS)
def test_inv_counts_on_shuffled_storage(backend, tree_inv5):
    parent = np.array([tree_inv5.parent], np.int8)
    out = kernels.inv_counts(parent, np.array([tree_inv5.w], np.int8), np.array([tree_inv5.lv], np.int8),
                             backend=backend)
    assert out.tolist() == [5]


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_batch_phi_psi_roundtrip(backend, n):
    a, b = sequence_pair_arrays(n)
    parent, w, lv = batch.psi_arrays(a, b, backend=backend)
    pairs = list(enumerate_sequence_pairs(n))
    assert as_trees(parent, w, lv) == [psi(sp) for sp in pairs]
    a2, b2 = batch.phi_arrays(parent, w, lv, backend=backend)
    np.testing.assert_array_equal(a2, a)
    np.testing.assert_array_equal(b2, b)


@pytest.mark.parametrize("backend", BACKENDS)
def test_batch_phi_on_canonical_trees(backend):
    parent, w, lv, _ = batch.tree_arrays(4, zero_only=True, backend=backend)
    a, b = batch.phi_arrays(parent, w, lv, backend=backend)
    for t, x, y in zip(as_trees(parent, w, lv), a.tolist(), b.tolist()):
        assert phi(t) == SequencePair(x, y)


def test_batch_phi_rejects_inversions(tree_inv5):
    from thetatrees.dyck import DomainError
    arr = [np.array([x], np.int8) for x in (tree_inv5.parent, tree_inv5.w, tree_inv5.lv)]
    with pytest.raises(DomainError):
        batch.phi_arrays(*arr)


def test_composition_and_rev_matrices():
    values = np.array([[4, 2, 2, 3, 4, 1, 1, 2, 3], [2, 3, 4, 3, 2, 3, 4, 4, 3]])
    counts = batch.composition_matrix(values, 5)
    assert counts.tolist() == [[2, 3, 2, 2, 0], [0, 2, 4, 3, 0]]
    rows = np.array([[0, 3, 4, 2, 0], [4, 2, 2, 0, 0], [0, 0, 0, 0, 0], [1, 0, 0, 0, 3]])
    want = [list(rev(WeakComposition(tuple(r))).padded(5)) for r in rows.tolist()]
    assert batch.rev_matrix(rows).tolist() == want


def test_int8_limit():
    with pytest.raises(ValueError):
        batch.tree_arrays(2, 200, 2)


def test_disable_flag_selects_numpy():
    env = dict(os.environ, THETATREES_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", "from thetatrees import _jit; print(_jit.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_benchmark_script_runs():
    if len(BACKENDS) < 2:
        pytest.skip("numba not installed")
    script = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    out = subprocess.run([sys.executable, script, "--n", "3", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "exploration_orders" in out.stdout
