"""Core symbol types, factorizations and matching pairs"""

from tph_invert.core.factorization import (
    AntisymFactorization,
    MatchingFactorization,
    WHFactorization,
    antisymmetric_factorization,
    is_matching_function,
    matching_factorization,
    wiener_hopf,
)
from tph_invert.core.pairs import MatchingPairAnalysis, subordinated_pair
from tph_invert.core.symbol import (
    CoeffWindow,
    RationalSymbol,
    compose,
    evaluate,
    fourier_coefficients,
    involution,
    laurent_symbol,
    make_symbol,
    winding_number,
)

__all__ = [
    "RationalSymbol",
    "CoeffWindow",
    "make_symbol",
    "laurent_symbol",
    "compose",
    "involution",
    "evaluate",
    "fourier_coefficients",
    "winding_number",
    "WHFactorization",
    "MatchingFactorization",
    "AntisymFactorization",
    "wiener_hopf",
    "matching_factorization",
    "antisymmetric_factorization",
    "is_matching_function",
    "MatchingPairAnalysis",
    "subordinated_pair",
]
