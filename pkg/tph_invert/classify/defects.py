"""
Defect numbers from antisymmetric factorizations

With c = c₊·t^{2n}·c̃₊⁻¹ and d̃ = (d̃)₊·t^{2m}·((d̃)₊)˜⁻¹ the kernel and cokernel
dimensions of T(a)+H(b) follow a four-case table in (n, m). When n, m > 0 they are
the kernel dimensions of A_{n,m} = [ρ_{i−j} + ρ_{i+j}] and its transpose, with

    ρ = t^{−m−n}·(1+t)·(1+t⁻¹)·c̃₊·d̃₊·b⁻¹

The tildes on the plus factors admit two readings: the tilde of the plus factor
(default) or the plus factor of the tilde. Both are available through ``reading``.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np
import scipy.linalg
from scipy.linalg import hankel, toeplitz

from tph_invert.config import RHO_READINGS, get_tolerances
from tph_invert.core.encoding import array_to_json
from tph_invert.core.factorization import ONE_PLUS_T, antisymmetric_factorization
from tph_invert.core.pairs import MatchingPairAnalysis
from tph_invert.core.symbol import RationalSymbol, fourier_coefficients
from tph_invert.errors import FactorizationUnavailable, TphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DefectEstimate:
    """Kernel and cokernel dimensions with the half indices that produced them"""

    dim_ker: int
    dim_coker: int
    n: int
    m: int
    reading: str
    matrix: Optional[np.ndarray] = None

    @property
    def index(self) -> int:
        return self.dim_ker - self.dim_coker

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "dim_ker": self.dim_ker,
            "dim_coker": self.dim_coker,
            "n": self.n,
            "m": self.m,
            "reading": self.reading,
            "matrix": None if self.matrix is None else [array_to_json(r) for r in self.matrix],
        }


def rho_symbol(
    analysis: MatchingPairAnalysis, reading: str = "tilde-of-plus"
) -> RationalSymbol:
    """
    ρ for the given reading of the tilded plus factors.

    Raises:
        FactorizationUnavailable: a factorization fails, or the weights leave a
            pole on the unit circle
    """
    if reading not in RHO_READINGS:
        raise ValueError(f"Unknown rho reading: {reading}. Available: {list(RHO_READINGS)}")
    c, d_tilde = analysis.c, analysis.d.tilde()
    c_factors = antisymmetric_factorization(c)
    d_factors = antisymmetric_factorization(d_tilde)
    n, m = c_factors.half_index, d_factors.half_index

    if reading == "tilde-of-plus":
        first, second = c_factors.plus.tilde(), d_factors.plus.tilde()
    else:
        first = antisymmetric_factorization(c.tilde()).plus
        second = antisymmetric_factorization(analysis.d).plus

    weight = ONE_PLUS_T * ONE_PLUS_T.tilde()
    rho = (weight * first * second / analysis.b).shifted(-m - n)
    try:
        return rho.checked()
    except TphError as exc:
        raise FactorizationUnavailable(f"ρ is not bounded on the circle: {exc}") from exc


def be_matrix(rho: RationalSymbol, n: int, m: int) -> np.ndarray:
    """A_{n,m}[i, j] = ρ_{i−j} + ρ_{i+j}, 0 ≤ i < n, 0 ≤ j < m"""
    lo, hi = -(m - 1), n + m - 2
    coeffs = fourier_coefficients(rho, lo, hi).coeffs
    # ρ_{i−j}: column i ↦ ρ_i, row j ↦ ρ_{−j}
    difference = toeplitz(coeffs[-lo : -lo + n], coeffs[-lo::-1][:m])
    total = hankel(coeffs[-lo : -lo + n], coeffs[-lo + n - 1 : -lo + n + m - 1])
    return difference + total


def defect_numbers_be(
    analysis: MatchingPairAnalysis, reading: str = "tilde-of-plus"
) -> DefectEstimate:
    """
    Kernel and cokernel dimensions of T(a)+H(b) from the antisymmetric factorizations.

    Raises:
        FactorizationUnavailable: c or d̃ has no antisymmetric factorization
    """
    n = antisymmetric_factorization(analysis.c).half_index
    m = antisymmetric_factorization(analysis.d.tilde()).half_index
    logger.debug("Antisymmetric half indices n=%d, m=%d", n, m)

    if n > 0 and m <= 0:
        return DefectEstimate(0, n - m, n, m, reading)
    if n <= 0 and m <= 0:
        return DefectEstimate(-n, -m, n, m, reading)
    if n <= 0 and m > 0:
        return DefectEstimate(m - n, 0, n, m, reading)

    matrix = be_matrix(rho_symbol(analysis, reading), n, m)
    singular = scipy.linalg.svdvals(matrix)
    tol = get_tolerances()
    rank = int(np.sum(singular > tol.rank * singular[0])) if singular[0] > 0 else 0
    return DefectEstimate(m - rank, n - rank, n, m, reading, matrix)
