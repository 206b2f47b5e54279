"""Dense finite sections of T(a) + H(b)"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import hankel, toeplitz

from tph_invert.core.symbol import RationalSymbol, fourier_coefficients


@dataclass(eq=False)
class DenseOperator:
    """
    Finite section with entries â_{k−j} + b̂_{k+j+1}, 0 ≤ j, k < N + margin.

    ``section`` is the square N×N section; the margin rows and columns let the
    verify module form the tall sections that separate kernel from cokernel.
    """

    N: int
    entries: np.ndarray
    margin: int = 0

    @property
    def section(self) -> np.ndarray:
        return self.entries[: self.N, : self.N]

    @property
    def tall(self) -> np.ndarray:
        """(N+margin)×N: the operator restricted to the first N coordinates"""
        return self.entries[:, : self.N]

    @property
    def wide(self) -> np.ndarray:
        """N×(N+margin): the first N output coordinates"""
        return self.entries[: self.N, :]


def truncate(
    a: RationalSymbol, b: Optional[RationalSymbol] = None, N: int = 64, margin: int = 0
) -> DenseOperator:
    """
    Finite section P_N (T(a) + H(b)) P_N, optionally enlarged by ``margin``.

    Example:
        >>> truncate(RationalSymbol.monomial(1), None, 3).section
        # strictly lower shift matrix
    """
    if N < 1 or margin < 0:
        raise ValueError(f"Need N ≥ 1 and margin ≥ 0, got N={N}, margin={margin}")
    size = N + margin
    a_hat = fourier_coefficients(a, -(size - 1), size - 1)
    column = a_hat.coeffs[size - 1 :]
    row = a_hat.coeffs[size - 1 :: -1]
    entries = toeplitz(column, row).astype(complex)
    if b is not None:
        b_hat = fourier_coefficients(b, 1, 2 * size - 1).coeffs
        entries = entries + hankel(b_hat[:size], b_hat[size - 1 :])
    return DenseOperator(N=N, entries=entries, margin=margin)
