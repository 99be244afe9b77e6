"""Exact Laplacian coefficients of trees: domination order, monotone
transformations, extremal families."""

from .analysis import (
    CrossingResult,
    DominationChain,
    ExtremalSweep,
    SecondExtremalReport,
    build_chain,
    closed_form_coeff,
    crossing_analysis,
    difference_sign_polynomial,
    extremal_sweep,
    limit_crossing_root,
    near_maximal_diameter_trees,
    second_extremal_check,
    verify_chain,
)
from .coeffs import (
    CoeffVector,
    MatchingVector,
    coeffs_via_charpoly,
    coeffs_via_matchings,
    laplacian_coeffs,
    matchings,
    path_matching_count,
)
from .config import DEFAULT_LIMITS, Limits
from .enumeration import enumerate_filtered, enumerate_trees
from .errors import (
    InvalidTreeError,
    LimitError,
    ParameterError,
    PreconditionError,
    TreeFormatError,
)
from .ordering import (
    ClassificationRow,
    PairClass,
    PairTag,
    PosetStats,
    classification_table,
    classify,
    classify_all,
    poset_stats,
)
from .transform import (
    TransformStep,
    VerificationReport,
    Violation,
    delta_transform,
    majorizes,
    path_shift,
    two_edge_shift,
    verify_monotonicity,
)
from .trees import (
    Tree,
    balanced_starlike,
    broom,
    canonical_code,
    caterpillar,
    center_vertices,
    centroid_vertices,
    diameter,
    distances,
    first_zagreb_index,
    format_tree,
    has_perfect_matching,
    is_isomorphic,
    matched_starlike,
    max_degree,
    mid_bundle_caterpillar,
    parse_tree,
    parse_trees,
    path,
    perfect_matching,
    star,
    starlike,
    subdivision,
    wiener_index,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffVector",
    "ClassificationRow",
    "CrossingResult",
    "DEFAULT_LIMITS",
    "DominationChain",
    "ExtremalSweep",
    "InvalidTreeError",
    "LimitError",
    "Limits",
    "MatchingVector",
    "PairClass",
    "PairTag",
    "ParameterError",
    "PosetStats",
    "PreconditionError",
    "SecondExtremalReport",
    "TransformStep",
    "Tree",
    "TreeFormatError",
    "VerificationReport",
    "Violation",
    "balanced_starlike",
    "broom",
    "build_chain",
    "canonical_code",
    "caterpillar",
    "center_vertices",
    "centroid_vertices",
    "classification_table",
    "classify",
    "classify_all",
    "closed_form_coeff",
    "coeffs_via_charpoly",
    "coeffs_via_matchings",
    "crossing_analysis",
    "delta_transform",
    "diameter",
    "difference_sign_polynomial",
    "distances",
    "enumerate_filtered",
    "enumerate_trees",
    "extremal_sweep",
    "first_zagreb_index",
    "format_tree",
    "has_perfect_matching",
    "is_isomorphic",
    "laplacian_coeffs",
    "limit_crossing_root",
    "majorizes",
    "matched_starlike",
    "matchings",
    "max_degree",
    "mid_bundle_caterpillar",
    "near_maximal_diameter_trees",
    "parse_tree",
    "parse_trees",
    "path",
    "path_matching_count",
    "path_shift",
    "perfect_matching",
    "poset_stats",
    "second_extremal_check",
    "star",
    "starlike",
    "subdivision",
    "two_edge_shift",
    "verify_chain",
    "verify_monotonicity",
    "wiener_index",
]
