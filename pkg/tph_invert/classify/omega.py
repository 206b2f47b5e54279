"""ω functions and the W_n matrix for the (−2n, 2n) index case"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
import scipy.linalg

from tph_invert.config import get_tolerances
from tph_invert.core.encoding import array_to_json, complex_to_json
from tph_invert.core.pairs import MatchingPairAnalysis
from tph_invert.core.symbol import laurent_symbol
from tph_invert.errors import WrongIndices
from tph_invert.operators.inverses import (
    omega_functions,
    omega_matrix,
    shifted_kernel_operator,
)
from tph_invert.operators.window import apply, symbol_window

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WnResult:
    """W_n with its determinant and the non-degeneracy verdict"""

    n: int
    matrix: np.ndarray
    determinant: complex
    nondegenerate: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "n": self.n,
            "matrix": [array_to_json(row) for row in self.matrix],
            "determinant": complex_to_json(self.determinant),
            "nondegenerate": self.nondegenerate,
        }


def omega_zero(
    analysis: MatchingPairAnalysis, window: Optional[int] = None
) -> Tuple[complex, complex]:
    """
    Zero coefficients of ω± = T⁻¹(c·t⁻²)·T(ã⁻¹·t⁻¹)·d₊⁻¹(1 ± σ(d)·t).

    T(a)+H(b) is left-invertible iff the first is nonzero; T(a)−H(b) iff the second is.

    Raises:
        WrongIndices: (κ₁, κ₂) ≠ (−2, 2)
    """
    if analysis.indices != (-2, 2):
        raise WrongIndices(f"need (κ₁, κ₂) = (-2, 2), got {analysis.indices}")
    transition = shifted_kernel_operator(analysis, 1)
    d_plus_inv = analysis.d_factors.plus.inverse()
    values = []
    for sign in (1.0, -1.0):
        seed = d_plus_inv * laurent_symbol({0: 1.0, 1: sign * analysis.sigma_d})
        values.append(apply(transition, symbol_window(seed), window).coefficient(0))
    logger.debug("omega zero coefficients: %s", values)
    return complex(values[0]), complex(values[1])


def wn_matrix(analysis: MatchingPairAnalysis, n: int, window: Optional[int] = None) -> WnResult:
    """
    W_n(a, b) = (ω_{jk}), the j-th coefficients of the kernel functions ω_k.

    Non-degenerate when its smallest singular value exceeds the rank tolerance
    times the largest.

    Raises:
        WrongIndices: (κ₁, κ₂) ≠ (−2n, 2n)
    """
    matrix = omega_matrix(omega_functions(analysis, n, window), n)
    singular = scipy.linalg.svdvals(matrix)
    tol = get_tolerances()
    nondegenerate = bool(singular[0] > 0 and singular[-1] > tol.rank * singular[0])
    result = WnResult(
        n=n,
        matrix=matrix,
        determinant=complex(np.linalg.det(matrix)),
        nondegenerate=nondegenerate,
    )
    logger.debug("W_%d determinant %s, nondegenerate=%s", n, result.determinant, nondegenerate)
    return result
