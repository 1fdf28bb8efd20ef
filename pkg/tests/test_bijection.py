import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetatrees.bijection import exploration_order, orders_agree_check, phi, psi, psi_steps
from thetatrees.compositions import rev
from thetatrees.dyck import DomainError, SequencePair, enumerate_sequence_pairs
from thetatrees.trees import (
    InvalidTreeError,
    TieredRootedTree,
    canonical,
    enumerate_trees,
    inv_count,
    label_composition,
    level_composition,
    validate_tree,
)

ZERO = {n: list(enumerate_trees(n, zero_only=True)) for n in range(1, 5)}
PAIRS = {n: list(enumerate_sequence_pairs(n)) for n in range(1, 5)}


def test_phi_on_tree9(tree9, pair9):
    assert inv_count(tree9) == 0
    assert phi(tree9) == pair9


def test_psi_on_tree9(tree9, pair9):
    assert psi(pair9) == tree9
    steps = {k: (p, branch) for k, p, branch in psi_steps(pair9)}
    assert steps[7] == (5, (0, 4, 5, 6))
    assert [steps[k][0] for k in range(1, 10)] == [0, 0, 0, 0, 4, 5, 5, 5, 8]


def test_tree9_statistics(tree9, pair9):
    beta = level_composition(tree9)
    assert beta.padded(4) == (0, 3, 4, 2)
    assert rev(beta).padded(4) == (0, 2, 4, 3) == pair9.y_composition().padded(4)
    assert label_composition(tree9) == pair9.x_composition()


def test_exploration_order_of_tree9(tree9):
    # the inverse construction numbers vertices in visit order
    assert tuple(exploration_order(tree9)) == tuple(range(1, 10))
    # store the same tree under another numbering: new vertex k is old vertex perm[k - 1]
    perm = [9, 3, 5, 1, 7, 2, 8, 4, 6]
    new = {old: k for k, old in enumerate(perm, start=1)}
    shuffled = TieredRootedTree(
        [0 if tree9.p(o) == 0 else new[tree9.p(o)] for o in perm],
        [tree9.w[o - 1] for o in perm], [tree9.lv[o - 1] for o in perm])
    assert validate_tree(shuffled).ok
    assert tuple(exploration_order(shuffled)) == tuple(new[o] for o in range(1, 10))


def test_phi_domain_errors(tree_inv5):
    with pytest.raises(DomainError):
        phi(tree_inv5)
    with pytest.raises(InvalidTreeError):
        phi(TieredRootedTree([0, 1], [2, 2], [1, 2]))


def test_empty_tree():
    assert phi(TieredRootedTree((), (), ())) == SequencePair((), ())
    assert psi(SequencePair((), ())).n == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_psi_phi_is_identity(n):
    for t in ZERO[n]:
        assert canonical(psi(phi(t))) == t


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_psi_is_identity(n):
    for sp in PAIRS[n]:
        t = psi(sp)
        assert validate_tree(t).ok and inv_count(t) == 0
        assert phi(t) == sp


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_agree(n):
    assert len(ZERO[n]) == len(PAIRS[n])
    assert len({phi(t) for t in ZERO[n]}) == len(ZERO[n])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_statistic_transport(n):
    for t in ZERO[n]:
        sp = phi(t)
        assert sp.x_composition() == label_composition(t)
        assert sp.y_composition() == rev(level_composition(t))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_construction_order_matches_total_order(n):
    assert all(orders_agree_check(psi(sp)) for sp in PAIRS[n])


def test_frozen_zero_counts():
    assert [len(ZERO[n]) for n in range(1, 5)] == [1, 7, 181, 10311]


@st.composite
def sequence_pairs(draw):
    n = draw(st.integers(1, 9))
    top = draw(st.integers(1, 6))
    a = [draw(st.integers(1, top))]
    b = [draw(st.integers(1, top))]
    for _ in range(n - 1):
        x, y = draw(st.integers(1, top)), draw(st.integers(1, top))
        if not (a[-1] < x or b[-1] < y):
            x = a[-1] + 1
        a.append(x)
        b.append(y)
    return SequencePair(a, b)


@settings(max_examples=200, deadline=None)
@given(sequence_pairs())
def test_random_pairs_roundtrip(sp):
    t = psi(sp)
    assert validate_tree(t).ok
    assert inv_count(t) == 0
    assert phi(t) == sp
    assert phi(canonical(t)) == sp


@settings(max_examples=100, deadline=None)
@given(sequence_pairs(), st.integers(1, 4))
def test_level_shift_moves_b_only(sp, c):
    t = psi(sp)
    shifted = TieredRootedTree(t.parent, t.w, [x + c for x in t.lv])
    assert phi(shifted) == SequencePair(sp.a, [y + c for y in sp.b])
