"""
tph_invert - Invertibility of Toeplitz plus Hankel operators

Decides one-sided and generalized invertibility of T(a) ± H(b) on H^2 when
a, b are rational and form a matching pair, builds the inverse expressions,
computes kernels and cokernels, and checks Fredholmness and the index on H^p
for piecewise continuous matching pairs. Results can be cross-checked against
dense finite sections.
"""

__version__ = "0.1.0"

from tph_invert.classify import ClassificationReport, InvertibilityStatus, decide
from tph_invert.config import RunConfig, Tolerances, get_tolerances, set_tolerances
from tph_invert.core import (
    MatchingPairAnalysis,
    RationalSymbol,
    make_symbol,
    subordinated_pair,
)
from tph_invert.errors import TphError
from tph_invert.operators import build_inverse, hankel, toeplitz
from tph_invert.pc_fredholm import PCSymbol, fredholm_conditions
from tph_invert.verify import svd_defects

__all__ = [
    "__version__",
    "RationalSymbol",
    "make_symbol",
    "MatchingPairAnalysis",
    "subordinated_pair",
    "toeplitz",
    "hankel",
    "build_inverse",
    "InvertibilityStatus",
    "ClassificationReport",
    "decide",
    "PCSymbol",
    "fredholm_conditions",
    "svd_defects",
    "RunConfig",
    "Tolerances",
    "get_tolerances",
    "set_tolerances",
    "TphError",
]
