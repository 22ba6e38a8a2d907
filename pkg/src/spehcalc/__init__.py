"""Symbolic Hom/Ext branching calculator for Arthur-type representations
of the p-adic general linear group."""

from .core import (
    ArthurParameter,
    CuspidalMultiset,
    CuspidalSymbol,
    HalfInt,
    SpehDatum,
    TwistedCuspidal,
    central_exponent,
    csupp_param,
    csupp_speh,
    in_cuspidal_lines,
)
from .sl2 import DiagonalRestriction, clebsch_gordan, diagonal_restriction, tensor_pair_recovery
from .segments import (
    JacquetResult,
    Segment,
    SegmentRep,
    az_dual_param,
    az_dual_speh,
    csupp_segment,
    is_generic_param,
    jacquet,
    linked,
    precedes,
    speh_from_segment_rep,
    speh_level,
    speh_minus,
    whittaker_dim,
)
from .relevance import (
    Matching,
    MatchedPair,
    MoveFamily,
    enumerate_ggp_matchings,
    enumerate_strong_matchings,
    ggp_relevant,
    same_cuspidal_support,
    strong_ext_relevant,
)
from .branching import (
    BranchingVerdict,
    HypothesisError,
    euler_poincare,
    ext_branch_recursive,
    ext_branch_segment_type,
    hom_branch_arthur,
    same_group_ext_segment_type,
    speh_pair_same_group,
)
from .dsl import (
    ParseError,
    SourceSpan,
    format_param,
    format_segment,
    format_segment_rep,
    format_support,
    format_term,
    parse_param,
    parse_rep,
    parse_segment,
    parse_support,
)

__all__ = [
    "ArthurParameter",
    "BranchingVerdict",
    "CuspidalMultiset",
    "CuspidalSymbol",
    "DiagonalRestriction",
    "HalfInt",
    "HypothesisError",
    "JacquetResult",
    "MatchedPair",
    "Matching",
    "MoveFamily",
    "ParseError",
    "Segment",
    "SegmentRep",
    "SourceSpan",
    "SpehDatum",
    "TwistedCuspidal",
    "az_dual_param",
    "az_dual_speh",
    "central_exponent",
    "clebsch_gordan",
    "csupp_param",
    "csupp_segment",
    "csupp_speh",
    "diagonal_restriction",
    "enumerate_ggp_matchings",
    "enumerate_strong_matchings",
    "euler_poincare",
    "ext_branch_recursive",
    "ext_branch_segment_type",
    "format_param",
    "format_segment",
    "format_segment_rep",
    "format_support",
    "format_term",
    "ggp_relevant",
    "hom_branch_arthur",
    "in_cuspidal_lines",
    "is_generic_param",
    "jacquet",
    "linked",
    "parse_param",
    "parse_rep",
    "parse_segment",
    "parse_support",
    "precedes",
    "same_cuspidal_support",
    "same_group_ext_segment_type",
    "speh_from_segment_rep",
    "speh_level",
    "speh_minus",
    "speh_pair_same_group",
    "strong_ext_relevant",
    "tensor_pair_recovery",
    "whittaker_dim",
]
