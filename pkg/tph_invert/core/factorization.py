"""
Factorizations of rational symbols

- Wiener–Hopf: g = g₋·t^m·g₊ with g₋(∞) = 1
- Matching functions (g·g̃ = 1): g = σ·g₊·t^{−n}·g̃₊⁻¹ with the signature σ = ±1
- Antisymmetric: g = P·t^{2k}·P̃⁻¹ with weight conditions on P

Every factorization is re-multiplied and compared with the input before it is returned.
"""

import logging
from dataclasses import dataclass

from tph_invert.config import get_tolerances
from tph_invert.core.symbol import RationalSymbol, evaluate, winding_number
from tph_invert.errors import (
    FactorizationUnavailable,
    NotMatchingFunction,
    SignatureNotUnimodular,
)

logger = logging.getLogger(__name__)

ONE_PLUS_T = RationalSymbol.build(1.0, 0, [-1.0])
ONE_MINUS_T = RationalSymbol.build(-1.0, 0, [1.0])


@dataclass(frozen=True)
class WHFactorization:
    """g = minus·t^index_m·plus"""

    minus: RationalSymbol
    index_m: int
    plus: RationalSymbol

    def product(self) -> RationalSymbol:
        return self.minus * self.plus.shifted(self.index_m)


@dataclass(frozen=True)
class MatchingFactorization:
    """g = sigma·plus·t^{−index_n}·tilde(plus)⁻¹, plus(0) = sigma"""

    sigma: int
    index_n: int
    plus: RationalSymbol

    def product(self) -> RationalSymbol:
        return (self.plus.shifted(-self.index_n) / self.plus.tilde()) * self.sigma


@dataclass(frozen=True)
class AntisymFactorization:
    """
    g = plus·t^{2·half_index}·tilde(plus)⁻¹.

    ``plus`` may carry a simple pole at −1 (the weight 1/(1+t)) and is then not a
    bounded symbol; it is never passed to the operator layer directly.
    """

    plus: RationalSymbol
    half_index: int

    def product(self) -> RationalSymbol:
        return self.plus.shifted(2 * self.half_index) / self.plus.tilde()


def wiener_hopf(g: RationalSymbol) -> WHFactorization:
    """
    Split g by the modulus of its zeros and poles.

    Raises:
        ZeroOnCircle, PoleOnCircle: g is not invertible on 𝕋
    """
    m = winding_number(g)
    inner_zeros = [z for z in g.zeros if abs(z) < 1.0]
    outer_zeros = [z for z in g.zeros if abs(z) > 1.0]
    inner_poles = [p for p in g.poles if abs(p) < 1.0]
    outer_poles = [p for p in g.poles if abs(p) > 1.0]

    minus = RationalSymbol.build(
        1.0, -(len(inner_zeros) - len(inner_poles)), inner_zeros, inner_poles
    )
    plus = RationalSymbol.build(g.gain, 0, outer_zeros, outer_poles)
    result = WHFactorization(minus=minus, index_m=m, plus=plus)
    if not result.product().is_close(g):
        raise FactorizationUnavailable("Wiener-Hopf factors do not reproduce the symbol")
    logger.debug(
        "Wiener-Hopf split: index %d, %d inner roots", m, len(inner_zeros) + len(inner_poles)
    )
    return result


def is_matching_function(g: RationalSymbol) -> bool:
    return (g * g.tilde()).is_one(get_tolerances().matching)


def matching_factorization(g: RationalSymbol) -> MatchingFactorization:
    """
    Factor a matching function and read off its signature σ = g₊(0).

    Raises:
        NotMatchingFunction: g·g̃ ≠ 1, or the minus factor is not σ·g̃₊⁻¹
        SignatureNotUnimodular: g₊(0) is not within tolerance of ±1
    """
    tol = get_tolerances()
    if not is_matching_function(g):
        raise NotMatchingFunction("g·g̃ is not identically 1")

    wh = wiener_hopf(g)
    value = evaluate(wh.plus, 0.0)
    if abs(value - 1.0) <= tol.signature:
        sigma = 1
    elif abs(value + 1.0) <= tol.signature:
        sigma = -1
    else:
        raise SignatureNotUnimodular(f"g₊(0) = {value} is not ±1")

    expected_minus = wh.plus.tilde().inverse() * sigma
    if not wh.minus.is_close(expected_minus):
        raise NotMatchingFunction("minus factor differs from σ·g̃₊⁻¹")
    return MatchingFactorization(sigma=sigma, index_n=-wh.index_m, plus=wh.plus)


def antisymmetric_factorization(g: RationalSymbol) -> AntisymFactorization:
    """
    Antisymmetric factorization of a matching function.

    With w = −index_n the plus factor is g₊, g₊/(1+t), g₊(1−t)/(1+t) or g₊(1−t)
    according to σ and the parity of w; (1+t)·plus and (1−t)/plus have no poles in
    the closed unit disk.
    """
    factors = matching_factorization(g)
    w = -factors.index_n
    g_plus = factors.plus

    if factors.sigma == 1 and w % 2 == 0:
        plus, half = g_plus, w // 2
    elif factors.sigma == 1:
        plus, half = g_plus / ONE_PLUS_T, (w + 1) // 2
    elif w % 2 == 0:
        plus, half = g_plus * ONE_MINUS_T / ONE_PLUS_T, w // 2
    else:
        plus, half = g_plus * ONE_MINUS_T, (w - 1) // 2

    result = AntisymFactorization(plus=plus, half_index=half)
    if not result.product().is_close(g):
        raise FactorizationUnavailable("antisymmetric factors do not reproduce the symbol")
    weighted_plus = ONE_PLUS_T * plus
    weighted_inverse = ONE_MINUS_T / plus
    for p in weighted_plus.poles + weighted_inverse.poles:
        if abs(p) <= 1.0:
            raise FactorizationUnavailable(f"weight condition fails: pole {p} in the closed disk")
    return result
