"""Tiered trees with inversions, 2-labelled Dyck paths with area, and the
bijection between their zero-statistic subfamilies."""

from .bijection import ExplorationOrder, exploration_order, orders_agree_check, phi, psi
from .compositions import WeakComposition, rev
from .dyck import (
    DomainError,
    LabelledDyckPath2,
    SequencePair,
    area,
    enumerate_paths,
    enumerate_sequence_pairs,
    from_sequence_pair,
    to_sequence_pair,
    validate_path,
    x_composition,
    y_composition,
)
from .genfunc import (
    GenPolynomial,
    VerificationReport,
    check_variable_symmetry,
    path_polynomial,
    tree_polynomial,
    verify_full_conjecture,
    verify_q0_theorem,
    verify_symmetry,
)
from .trees import (
    InvalidTreeError,
    TieredRootedForest,
    TieredRootedTree,
    canonical,
    compatible,
    enumerate_trees,
    forest_tree_convert,
    inv_count,
    is_inversion,
    label_composition,
    level_composition,
    precedes,
    reverse_level,
    validate_tree,
)

__version__ = "0.1.0"
