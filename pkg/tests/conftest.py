import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from thetatrees import LabelledDyckPath2, SequencePair, TieredRootedTree  # noqa: E402

# Worked examples as parent arrays with the root at 0.
TREE_INV5 = TieredRootedTree(
    parent=[0, 1, 2, 3, 0, 5, 6, 5],
    w=[2, 4, 3, 4, 4, 2, 1, 2],
    lv=[1, 2, 1, 3, 3, 2, 1, 1],
)

PATH_AREA7 = LabelledDyckPath2(
    "NNENEENNNEENENEE",
    (1, 2, 4, 1, 3, 5, 1, 3),
    (1, 4, 2, 2, 4, 5, 4, 5),
)

PAIR9 = SequencePair((4, 2, 2, 3, 4, 1, 1, 2, 3), (2, 3, 4, 3, 2, 3, 4, 4, 3))


@pytest.fixture
def tree_inv5():
    return TREE_INV5


@pytest.fixture
def path_area7():
    return PATH_AREA7


@pytest.fixture
def pair9():
    return PAIR9


@pytest.fixture
def tree9():
    # vertex ids follow the construction order v1..v9
    return TieredRootedTree(
        parent=[0, 0, 0, 0, 4, 5, 5, 5, 8],
        w=[3, 2, 1, 1, 4, 3, 2, 2, 4],
        lv=[3, 2, 2, 3, 4, 3, 2, 3, 4],
    )


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
