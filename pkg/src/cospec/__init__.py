"""Exact-arithmetic construction and verification of cospectral graph pairs."""

from .construct import (
    HypothesisReport,
    SwapPlan,
    check_hypotheses,
    parse_plan,
    swap_construct,
    verify_distance_preservation,
    verify_pi_isomorphism,
    verify_similarity,
)
from .cousins import (
    FLAG_NAMES,
    CousinClassification,
    canonical_swap_order,
    classify_pair,
    enumerate_cousin_pairs,
    find_involution,
    involution_from_pairs,
)
from .exact import (
    BiPoly,
    BlockConditionReport,
    ExactMatrix,
    UniPoly,
    anti_transpose,
    bipoly_eval,
    charpoly,
    charpoly_oracle,
    check_block_conditions,
    conjugate,
    exchange_matrix,
    swap_similarity,
    uni_slice,
)
from .graphs import (
    UNREACHABLE,
    DistanceTable,
    Graph,
    PreconditionError,
    VertexMap,
    all_pairs_distances,
    degrees,
    diameter,
    glue,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    is_regular,
    is_transmission_regular,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    transmissions,
)
from .spectra import (
    DISTANCE_KINDS,
    KIND_ORDER,
    IdentityReport,
    MatrixKind,
    adjacency_matrix,
    build_matrix,
    cospectral,
    derived_identities_check,
    generalized_charpoly,
    min_degree,
    normalized_charpoly,
)

__all__ = [
    "BiPoly",
    "DISTANCE_KINDS",
    "FLAG_NAMES",
    "KIND_ORDER",
    "BlockConditionReport",
    "CousinClassification",
    "DistanceTable",
    "ExactMatrix",
    "Graph",
    "HypothesisReport",
    "IdentityReport",
    "MatrixKind",
    "PreconditionError",
    "SwapPlan",
    "UNREACHABLE",
    "UniPoly",
    "VertexMap",
    "adjacency_matrix",
    "all_pairs_distances",
    "anti_transpose",
    "bipoly_eval",
    "build_matrix",
    "canonical_swap_order",
    "charpoly",
    "charpoly_oracle",
    "check_block_conditions",
    "check_hypotheses",
    "classify_pair",
    "conjugate",
    "cospectral",
    "degrees",
    "derived_identities_check",
    "diameter",
    "enumerate_cousin_pairs",
    "exchange_matrix",
    "find_involution",
    "generalized_charpoly",
    "glue",
    "induced_subgraph",
    "involution_from_pairs",
    "is_connected",
    "is_isomorphic",
    "is_regular",
    "is_transmission_regular",
    "min_degree",
    "normalized_charpoly",
    "parse_edge_list",
    "parse_graph6",
    "parse_plan",
    "swap_construct",
    "swap_similarity",
    "to_graph6",
    "transmissions",
    "uni_slice",
    "verify_distance_preservation",
    "verify_pi_isomorphism",
    "verify_similarity",
]
