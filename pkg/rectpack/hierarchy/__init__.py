from rectpack.hierarchy.coloring import (
    HierarchyReport,
    color_bound,
    hierarchical_coloring,
    hierarchical_coloring_with_report,
    hierarchy_report,
    round_cap,
)
from rectpack.hierarchy.decomposition import (
    DecompositionTree,
    LemmaCheck,
    build_decomposition,
    check_clique_lemma,
    check_partition_lemma,
    check_tree_invariants,
    check_witness_corollary,
)
from rectpack.hierarchy.reduction import (
    CoveringWitness,
    alpha_covering,
    compute_T,
    residual_clique_bound,
    sparse_certificate,
)

__all__ = [
    "CoveringWitness",
    "DecompositionTree",
    "HierarchyReport",
    "LemmaCheck",
    "alpha_covering",
    "build_decomposition",
    "check_clique_lemma",
    "check_partition_lemma",
    "check_tree_invariants",
    "check_witness_corollary",
    "color_bound",
    "compute_T",
    "hierarchical_coloring",
    "hierarchical_coloring_with_report",
    "hierarchy_report",
    "residual_clique_bound",
    "round_cap",
]
