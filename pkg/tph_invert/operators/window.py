"""
Window evaluation of operator expressions

Expressions act on two-sided coefficient vectors stored on the index range
[−W, W−1]. On this range the flip n ↦ −n−1 is an exact reversal, P and Q are the
two halves, and multiplication by a symbol is a convolution with its coefficients
on [−2W, 2W]. Edge effects travel inward from both ends, so only the inner half
[−W/2, W/2−1] of the result is returned. W is doubled until the coefficient tail
ρ^{W/2} of every symbol in the expression drops below the tail tolerance.
"""

import logging
from typing import Dict, Iterable, Optional, Union

import numpy as np
from scipy.signal import fftconvolve

from tph_invert.config import get_tolerances
from tph_invert.core.symbol import CoeffWindow, RationalSymbol, fourier_coefficients
from tph_invert.errors import TruncationTooSmall
from tph_invert.operators.expr import (
    Compose,
    Flip,
    Hankel,
    Identity,
    MulSymbol,
    OperatorExpr,
    Power,
    ProjP,
    ProjQ,
    Scale,
    Sum,
    Toeplitz,
)

logger = logging.getLogger(__name__)

# Above this window size convolutions go through the FFT
_DIRECT_CONVOLUTION_LIMIT = 1024


def _next_power_of_two(value: int) -> int:
    return 1 << max(0, int(value - 1).bit_length())


def required_window(symbols: Iterable[RationalSymbol], minimum: int = 0) -> int:
    """
    Smallest power-of-two W ≥ minimum with ρ^{W/2} ≤ tail tolerance.

    Raises:
        TruncationTooSmall: the required W exceeds the configured maximum
    """
    tol = get_tolerances()
    rho = max((g.decay_ratio for g in symbols), default=0.0)
    window = _next_power_of_two(max(minimum, tol.min_window))
    while rho > 0 and rho ** (window / 2) > tol.tail:
        window *= 2
        logger.debug("Doubling window to %d (decay ratio %.4f)", window, rho)
    if window > tol.max_window:
        raise TruncationTooSmall(
            f"Decay ratio {rho:.6f} needs window {window} > max {tol.max_window}"
        )
    return window


def symbol_window(g: RationalSymbol, window: Optional[int] = None) -> CoeffWindow:
    """Coefficients of g as a vector, on [−W/2, W/2−1]"""
    window = window or required_window([g])
    return fourier_coefficients(g, -window // 2, window // 2 - 1)


def as_window(x: Union[CoeffWindow, RationalSymbol, np.ndarray, list]) -> CoeffWindow:
    """Coerce inputs: windows pass through, symbols expand, arrays start at index 0"""
    if isinstance(x, CoeffWindow):
        return x
    if isinstance(x, RationalSymbol):
        return symbol_window(x)
    coeffs = np.asarray(x, dtype=complex)
    return CoeffWindow(0, coeffs.size - 1, coeffs)


def _convolve(v: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    if v.size > 2 * _DIRECT_CONVOLUTION_LIMIT:
        return fftconvolve(v, kernel)
    return np.convolve(v, kernel)


class _Evaluator:
    """Recursive evaluation on one fixed window"""

    def __init__(self, window: int):
        self.window = window
        self._symbol_cache: Dict[RationalSymbol, np.ndarray] = {}

    def coefficients(self, g: RationalSymbol) -> np.ndarray:
        if g not in self._symbol_cache:
            w = self.window
            self._symbol_cache[g] = fourier_coefficients(g, -2 * w, 2 * w).coeffs
        return self._symbol_cache[g]

    def multiply(self, g: RationalSymbol, v: np.ndarray) -> np.ndarray:
        w = self.window
        return _convolve(v, self.coefficients(g))[2 * w : 4 * w]

    def project_p(self, v: np.ndarray) -> np.ndarray:
        out = v.copy()
        out[: self.window] = 0
        return out

    def project_q(self, v: np.ndarray) -> np.ndarray:
        out = v.copy()
        out[self.window :] = 0
        return out

    def shift(self, m: int, v: np.ndarray) -> np.ndarray:
        out = np.zeros_like(v)
        if m == 0:
            return v.copy()
        if abs(m) >= v.size:
            return out
        if m > 0:
            out[m:] = v[:-m]
        else:
            out[:m] = v[-m:]
        return out

    def run(self, expr: OperatorExpr, v: np.ndarray) -> np.ndarray:
        if isinstance(expr, Identity):
            return v
        if isinstance(expr, Scale):
            return expr.factor * v
        if isinstance(expr, Compose):
            for factor in reversed(expr.factors):
                v = self.run(factor, v)
            return v
        if isinstance(expr, Sum):
            total = np.zeros_like(v)
            for term in expr.terms:
                total = total + self.run(term, v)
            return total
        if isinstance(expr, ProjP):
            return self.project_p(v)
        if isinstance(expr, ProjQ):
            return self.project_q(v)
        if isinstance(expr, Flip):
            return v[::-1].copy()
        if isinstance(expr, Power):
            return self.shift(expr.exponent, v)
        if isinstance(expr, MulSymbol):
            return self.multiply(expr.symbol, v)
        if isinstance(expr, Toeplitz):
            return self.project_p(self.multiply(expr.symbol, self.project_p(v)))
        if isinstance(expr, Hankel):
            return self.project_p(self.multiply(expr.symbol, self.project_p(v)[::-1]))
        raise TypeError(f"Unsupported expression node: {type(expr).__name__}")


def apply(
    expr: OperatorExpr,
    x: Union[CoeffWindow, RationalSymbol, np.ndarray, list],
    window: Optional[int] = None,
) -> CoeffWindow:
    """
    Evaluate expr on x.

    Args:
        expr: Operator expression
        x: Input coefficients (a window, a symbol, or an array indexed from 0)
        window: Minimum working half-width W; grown as needed

    Returns:
        The result on the trusted interior [−W/2, W/2−1]

    Raises:
        TruncationTooSmall: the symbols decay too slowly for the maximum window
    """
    x = as_window(x)
    symbols = list(expr.symbols())
    support = 2 * max(abs(x.lo), abs(x.hi) + 1)
    w = required_window(symbols, max(window or 0, support))
    evaluator = _Evaluator(w)
    result = evaluator.run(expr, x.restrict(-w, w - 1).coeffs)
    decay = max([g.decay_ratio for g in symbols] + [x.decay_ratio])
    return CoeffWindow(-w, w - 1, result, decay).interior()
