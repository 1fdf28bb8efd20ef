import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dyck_words_naive, naive_paths, shoelace_area
from thetatrees.dyck import (
    DomainError,
    LabelledDyckPath2,
    SequencePair,
    area,
    dyck_words,
    enumerate_paths,
    enumerate_sequence_pairs,
    from_sequence_pair,
    path_arrays,
    sequence_pair_arrays,
    staircase,
    to_sequence_pair,
    validate_path,
    x_composition,
    y_composition,
)


def test_path_area7_path(path_area7):
    assert validate_path(path_area7).ok
    assert area(path_area7) == 7
    assert x_composition(path_area7).padded(5) == (3, 1, 2, 1, 1)
    assert y_composition(path_area7).padded(5) == (1, 2, 0, 3, 2)


def test_path_area7_geometry(path_area7):
    assert path_area7.north_columns() == [0, 0, 1, 3, 3, 3, 5, 6]
    assert path_area7.east_counts() == [0, 0, 1, 2, 0, 0, 2, 1, 2]  # lines y = 0..8
    assert area(path_area7) == shoelace_area(path_area7.steps)


def test_path_area7_row_condition_is_tight(path_area7):
    # lowering a label at a row with no east steps on its line breaks the path
    broken = LabelledDyckPath2(path_area7.steps, (1, 2, 4, 5, 3, 5, 1, 3), path_area7.piy)
    verdict = validate_path(broken)
    assert not verdict.ok and verdict.bad_rows == (4,)


def test_area_extremes():
    assert area(LabelledDyckPath2("NNNNEEEE", (1, 1, 1, 1), (1, 2, 3, 4))) == 6
    assert area(LabelledDyckPath2(staircase(4), (1, 2, 3, 4), (1, 2, 3, 4))) == 0
    for n in range(1, 7):
        assert area(LabelledDyckPath2("N" * n + "E" * n, (1,) * n, tuple(range(1, n + 1)))) \
            == n * (n - 1) // 2 == shoelace_area("N" * n + "E" * n)


@pytest.mark.parametrize("steps, reason", [
    ("NEEN", "below"), ("NNNE", "2 E steps"), ("NXEE", "letters"),
])
def test_structural_errors(steps, reason):
    verdict = validate_path({"steps": steps, "pix": [1, 1], "piy": [1, 1]})
    assert not verdict.ok
    assert reason in " ".join(verdict.messages())


def test_inconsistent_lengths_rejected():
    with pytest.raises(ValueError):
        LabelledDyckPath2("NNE", (1,), (1,))


def test_staircase_pairs():
    path = LabelledDyckPath2(staircase(3), (1, 2, 1), (3, 2, 4))
    sp = to_sequence_pair(path)
    assert (sp.a, sp.b) == ((1, 2, 1), (3, 2, 4))
    assert from_sequence_pair(sp) == path
    with pytest.raises(DomainError):
        to_sequence_pair(LabelledDyckPath2("NNEE", (1, 1), (1, 2)))


def test_sequence_pair_increase_condition():
    SequencePair((1, 1), (1, 2))
    SequencePair((1, 2), (2, 2))
    with pytest.raises(ValueError):
        SequencePair((2, 1), (2, 2))
    with pytest.raises(ValueError):
        SequencePair((1, 0), (1, 2))
    with pytest.raises(ValueError):
        SequencePair((1, 2), (1,))


def test_sequence_pair_compositions(pair9):
    assert pair9.x_composition().padded(4) == (2, 3, 2, 2)
    assert pair9.y_composition().padded(4) == (0, 2, 4, 3)


@pytest.mark.parametrize("n", range(0, 7))
def test_dyck_words_against_naive(n):
    assert list(dyck_words(n)) == sorted(dyck_words_naive(n), key=lambda s: s.replace("N", "0").replace("E", "1"))


@pytest.mark.parametrize("n, bound", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
@pytest.mark.parametrize("area_zero", [False, True])
def test_enumerate_paths_matches_naive(n, bound, area_zero):
    got = [(p.steps, p.pix, p.piy) for p in enumerate_paths(n, bound, area_zero=area_zero)]
    assert len(got) == len(set(got))
    assert set(got) == naive_paths(n, bound, area_zero)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_path_arrays_match_stream(n):
    paths = list(enumerate_paths(n))
    words = list(dyck_words(n))
    word_idx, pix, piy, areas = path_arrays(n)
    assert len(paths) == len(word_idx)
    for p, wi, x, y, a in zip(paths, word_idx, pix.tolist(), piy.tolist(), areas.tolist()):
        assert (words[wi], tuple(x), tuple(y), a) == (p.steps, p.pix, p.piy, area(p))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sequence_pair_arrays_match_stream(n):
    a, b = sequence_pair_arrays(n)
    stream = [(sp.a, sp.b) for sp in enumerate_sequence_pairs(n)]
    assert [(tuple(x), tuple(y)) for x, y in zip(a.tolist(), b.tolist())] == stream


def test_frozen_path_counts():
    assert sum(1 for _ in enumerate_sequence_pairs(3)) == 181
    assert sum(1 for _ in enumerate_paths(3)) == 297
    assert len(sequence_pair_arrays(4)[0]) == 10311
    assert len(path_arrays(4)[0]) == 26624


def test_labels_strictly_increase_up_columns():
    for p in enumerate_paths(4, 3):
        cols = p.north_columns()
        for i in range(1, p.n):
            if cols[i] == cols[i - 1]:
                assert p.pix[i] > p.pix[i - 1] and p.piy[i] > p.piy[i - 1]


def test_roundtrip_dict_and_text(path_area7):
    assert LabelledDyckPath2.from_dict(path_area7.to_dict()) == path_area7
    assert path_area7.text() == "NNENEENNNEENENEE;1,2,4,1,3,5,1,3;1,4,2,2,4,5,4,5"


@given(st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=8))
def test_sequence_pair_through_staircase(rows):
    a = tuple(r[0] for r in rows)
    b = tuple(r[1] for r in rows)
    ok = all(a[i] < a[i + 1] or b[i] < b[i + 1] for i in range(len(a) - 1))
    path = LabelledDyckPath2(staircase(len(a)), a, b)
    assert validate_path(path).ok == ok
    if ok:
        assert to_sequence_pair(path) == SequencePair(a, b)
        assert area(path) == 0
