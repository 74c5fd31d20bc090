"""Exact Schur expansions of skew shapes and Schur-positivity posets of ribbons.

The Littlewood-Richardson engine expands any skew Schur function exactly;
differences of expansions induce the Schur-positivity order on diagrams.
For multiplicity-free ribbons that order has a closed form on rectangle
labels, implemented alongside exhaustive verification against the engine.
"""

from .diagrams import (
    DEFAULT_ENUMERATION_LIMIT,
    MfPattern,
    SkewDiagram,
    composition_of,
    enumerate_basic_skew,
    is_connected,
    is_ribbon,
    mf_pattern,
    profile,
    rectangle_count,
    ribbon_of,
    rotate180,
    transpose,
)
from .errors import DomainError
from .lattice import (
    RectLabel,
    RefutationEvidence,
    TrimReport,
    canonical_label,
    chain_rank,
    covers,
    elements,
    fourcovers_delta,
    fourcovers_pair,
    join,
    label_of_ribbon,
    leq_s_closed,
    meet,
    onlycovers_pair,
    onlycovers_witness,
    ribbon_of_label,
    schubert_pair,
    trim_report,
    verify_bigdiff,
    verify_fourcovers,
    verify_mflemma,
    verify_onlycovers,
)
from .lr import (
    DEFAULT_EXPANSION_LIMIT,
    ComparisonResult,
    Relation,
    SchurVector,
    compare_vectors,
    expand,
    is_lattice_word,
    is_multiplicity_free_vec,
    omega_vec,
)
from .partitions import (
    Composition,
    Partition,
    as_composition,
    as_partition,
    compositions_of,
    conjugate,
    dominance_leq,
    partitions_of,
    reverse,
    sort_to_partition,
)
from .poset import (
    PosetModel,
    SchurClass,
    VerifyReport,
    build_poset,
    check_convex,
    check_graded,
    check_join_semilattice,
    compare_diagrams,
    convexity_report,
    necessary_filter,
)

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "DEFAULT_EXPANSION_LIMIT",
    "ComparisonResult",
    "Composition",
    "DomainError",
    "MfPattern",
    "Partition",
    "PosetModel",
    "RectLabel",
    "RefutationEvidence",
    "Relation",
    "SchurClass",
    "SchurVector",
    "SkewDiagram",
    "TrimReport",
    "VerifyReport",
    "as_composition",
    "as_partition",
    "build_poset",
    "canonical_label",
    "chain_rank",
    "check_convex",
    "check_graded",
    "check_join_semilattice",
    "compare_diagrams",
    "compare_vectors",
    "composition_of",
    "compositions_of",
    "conjugate",
    "convexity_report",
    "covers",
    "dominance_leq",
    "elements",
    "enumerate_basic_skew",
    "expand",
    "fourcovers_delta",
    "fourcovers_pair",
    "is_connected",
    "is_lattice_word",
    "is_multiplicity_free_vec",
    "is_ribbon",
    "join",
    "label_of_ribbon",
    "leq_s_closed",
    "meet",
    "mf_pattern",
    "necessary_filter",
    "omega_vec",
    "onlycovers_pair",
    "onlycovers_witness",
    "partitions_of",
    "profile",
    "rectangle_count",
    "reverse",
    "ribbon_of",
    "ribbon_of_label",
    "rotate180",
    "schubert_pair",
    "sort_to_partition",
    "transpose",
    "trim_report",
    "verify_bigdiff",
    "verify_fourcovers",
    "verify_mflemma",
    "verify_onlycovers",
]
