"""
Inverse operators for Toeplitz and Toeplitz-plus-Hankel operators

Supports:
- Toeplitz inverses (two-sided, right, left) from the Wiener–Hopf factors
- Right inverse when κ₁, κ₂ ≥ 0 and left inverse when κ₁, κ₂ ≤ 0
- Generalized inverse when κ₁ ≥ 0 ≥ κ₂
- The (−1, 1) signature clause with its rank-one projection prefix
- The (−2n, 2n) case through the shifted operator and the W_n correction

All results are OperatorExpr trees.
"""

import logging
from enum import Enum
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from tph_invert.core.pairs import MatchingPairAnalysis
from tph_invert.core.factorization import wiener_hopf
from tph_invert.core.symbol import CoeffWindow, RationalSymbol, laurent_symbol
from tph_invert.errors import CaseUnsupported, WrongIndexForSide, WrongIndices
from tph_invert.operators.expr import (
    Identity,
    OperatorExpr,
    add,
    coefficient_extractor,
    compose,
    hankel,
    multiply,
    scale,
    toeplitz,
)
from tph_invert.operators.window import apply, symbol_window

logger = logging.getLogger(__name__)


class Clause(str, Enum):
    """Which rule of the decision procedure produced a verdict"""

    SIGNATURE_I = "signature-case-i"
    SIGNATURE_II = "signature-case-ii"
    SIGNATURE_III = "signature-case-iii"
    SIGNATURE_IV = "signature-case-iv"
    SIGNATURE_V = "signature-case-v"
    SIGNATURE_VI = "signature-case-vi"
    SIGNATURE_VII = "signature-case-vii"
    SIGNATURE_VIII = "signature-case-viii"
    SIGNATURE_IX = "signature-case-ix"
    RIGHT_INVERSE = "right-inverse"
    LEFT_INVERSE = "left-inverse"
    GENERALIZED_INVERSE = "generalized-inverse"
    SHIFT_CORRECTION = "shift-correction"
    NECESSARY_ONLY = "necessary-conditions-only"
    NECESSARY_VIOLATED = "necessary-conditions-violated"


RIGHT_CLAUSES = (Clause.SIGNATURE_I, Clause.SIGNATURE_II, Clause.SIGNATURE_III, Clause.SIGNATURE_IV)
LEFT_CLAUSES = (Clause.SIGNATURE_V, Clause.SIGNATURE_VI, Clause.SIGNATURE_VII)


def toeplitz_inverse_expr(g: RationalSymbol, side: str) -> OperatorExpr:
    """
    Inverse of T(g) from g = g₋·t^m·g₊.

    - two_sided (m = 0): T(g₊⁻¹)·T(g₋⁻¹)
    - right (ind T(g) = −m ≥ 0): T(g₊⁻¹)·T(g₋⁻¹)·T(t^{−m})
    - left (ind T(g) ≤ 0): T(t^{−m})·T(g₊⁻¹)·T(g₋⁻¹)

    At index zero the right and left inverses are the two-sided inverse.

    Raises:
        WrongIndexForSide: the index has the wrong sign for the requested side
    """
    factors = wiener_hopf(g)
    m = factors.index_m
    core = compose(toeplitz(factors.plus.inverse()), toeplitz(factors.minus.inverse()))
    if side == "two_sided":
        if m != 0:
            raise WrongIndexForSide(f"T(g) has index {-m}, no two-sided inverse")
        return core
    if side == "right":
        if m > 0:
            raise WrongIndexForSide(f"T(g) has index {-m} < 0, no right inverse")
        return compose(core, toeplitz(RationalSymbol.monomial(-m)))
    if side == "left":
        if m < 0:
            raise WrongIndexForSide(f"T(g) has index {-m} > 0, no left inverse")
        return compose(toeplitz(RationalSymbol.monomial(-m)), core)
    raise ValueError(f"Unknown side: {side}. Available: ['two_sided', 'right', 'left']")


def _right(g: RationalSymbol) -> OperatorExpr:
    return toeplitz_inverse_expr(g, "right")


def _left(g: RationalSymbol) -> OperatorExpr:
    return toeplitz_inverse_expr(g, "left")


def right_inverse_expr(analysis: MatchingPairAnalysis) -> OperatorExpr:
    """
    Right inverse for κ₁, κ₂ ≥ 0:

        (I − H(c̃))·T_r⁻¹(c)·T(ã⁻¹)·T_r⁻¹(d) + H(a⁻¹)·T_r⁻¹(d)
    """
    if analysis.kappa1 < 0 or analysis.kappa2 < 0:
        raise CaseUnsupported(f"right inverse needs κ₁, κ₂ ≥ 0, got {analysis.indices}")
    a, c, d = analysis.a, analysis.c, analysis.d
    r_d = _right(d)
    first = compose(
        Identity() - hankel(c.tilde()), _right(c), toeplitz(a.tilde().inverse()), r_d
    )
    return add(first, compose(hankel(a.inverse()), r_d))


def _abd_template(
    analysis: MatchingPairAnalysis, x_c: OperatorExpr, x_d: OperatorExpr
) -> OperatorExpr:
    """
    −H(c̃)·(X_c·T(ã⁻¹)·X_d·(I − H(d)) + X_c·H(ã⁻¹)) + H(a⁻¹)·X_d·(I − H(d)) + T(a⁻¹)
    """
    a, c, d = analysis.a, analysis.c, analysis.d
    a_tilde_inv = a.tilde().inverse()
    tail = compose(x_d, Identity() - hankel(d))
    inner = add(compose(x_c, toeplitz(a_tilde_inv), tail), compose(x_c, hankel(a_tilde_inv)))
    return add(
        -compose(hankel(c.tilde()), inner),
        compose(hankel(a.inverse()), tail),
        toeplitz(a.inverse()),
    )


def left_inverse_expr(analysis: MatchingPairAnalysis) -> OperatorExpr:
    """Left inverse for κ₁, κ₂ ≤ 0 (the template with T_l⁻¹(c) and T_l⁻¹(d))"""
    if analysis.kappa1 > 0 or analysis.kappa2 > 0:
        raise CaseUnsupported(f"left inverse needs κ₁, κ₂ ≤ 0, got {analysis.indices}")
    return _abd_template(analysis, _left(analysis.c), _left(analysis.d))


def generalized_inverse_expr(analysis: MatchingPairAnalysis) -> OperatorExpr:
    """
    Generalized inverse for κ₁ ≥ 0 ≥ κ₂.

    The template with T_r⁻¹(c) and T_l⁻¹(d) composed with A gives I + H(c̃)·Π, where
    Π = I − T_r⁻¹(c)·T(c) projects onto ker T(c). On ker T(c) the operator H(c̃)
    acts as the involution JQcP, so the prefix I − Π/2 turns the template into a
    generalized inverse, and into the inverse whenever A is invertible.
    """
    if analysis.kappa1 < 0 or analysis.kappa2 > 0:
        raise CaseUnsupported(
            f"generalized inverse needs κ₁ ≥ 0 ≥ κ₂, got {analysis.indices}"
        )
    r_c = _right(analysis.c)
    template = _abd_template(analysis, r_c, _left(analysis.d))
    if analysis.kappa1 == 0:
        return template
    kernel_projection = Identity() - compose(r_c, toeplitz(analysis.c))
    return compose(Identity() - scale(0.5, kernel_projection), template)


def signature_ix_inverse_expr(analysis: MatchingPairAnalysis) -> OperatorExpr:
    """
    Inverse for (κ₁, κ₂) = (−1, 1), σ(c) = σ(d) = −1.

    A = C·T(t) with C the operator of the pair (a·t⁻¹, b·t), whose kernel is
    spanned by c₊⁻¹. With R₁ a right inverse of C,

        A⁻¹ = T(t⁻¹)·(I − M((σ(c)c₊)⁻¹)·e₀)·R₁

    where e₀ f = f̂₀; the middle factor projects onto im T(t) along ker C.
    """
    if analysis.indices != (-1, 1) or analysis.signatures != (-1, -1):
        raise CaseUnsupported(
            f"clause ix needs κ = (−1, 1) and σ = (−1, −1), got {analysis.indices}, "
            f"{analysis.signatures}"
        )
    lifted = analysis.shifted(1)
    normalized_plus = analysis.c_factors.plus * analysis.sigma_c
    prefix = Identity() - compose(multiply(normalized_plus.inverse()), coefficient_extractor(0))
    return compose(toeplitz(RationalSymbol.monomial(-1)), prefix, right_inverse_expr(lifted))


def shifted_kernel_operator(analysis: MatchingPairAnalysis, n: int) -> OperatorExpr:
    """E = T⁻¹(c·t^{−2n})·T(ã⁻¹·t^{−n}), the transition map of the shifted pair"""
    c_shifted = analysis.c.shifted(-2 * n)
    return compose(
        toeplitz_inverse_expr(c_shifted, "two_sided"),
        toeplitz(analysis.a.tilde().inverse().shifted(-n)),
    )


def shifted_kernel_seeds(analysis: MatchingPairAnalysis, n: int) -> List[RationalSymbol]:
    """v_k = d₊⁻¹·(t^{n−k−1} + σ(d)·t^{n+k}), k = 0..n−1"""
    d_plus_inv = analysis.d_factors.plus.inverse()
    return [
        d_plus_inv * laurent_symbol({n - k - 1: 1.0, n + k: float(analysis.sigma_d)})
        for k in range(n)
    ]


def _require_shift_indices(analysis: MatchingPairAnalysis, n: int) -> None:
    if n < 1 or analysis.indices != (-2 * n, 2 * n):
        raise WrongIndices(f"need (κ₁, κ₂) = ({-2 * n}, {2 * n}), got {analysis.indices}")


def omega_functions(
    analysis: MatchingPairAnalysis, n: int, window: Optional[int] = None
) -> List[CoeffWindow]:
    """
    ω_k = E(v_k), k = 0..n−1: a basis of the kernel of the shifted operator.

    Raises:
        WrongIndices: (κ₁, κ₂) ≠ (−2n, 2n)
    """
    _require_shift_indices(analysis, n)
    transition = shifted_kernel_operator(analysis, n)
    results = []
    for seed in shifted_kernel_seeds(analysis, n):
        results.append(apply(transition, symbol_window(seed), window))
    return results


def omega_matrix(omegas: Sequence[CoeffWindow], n: int) -> np.ndarray:
    """W[j, k] = j-th coefficient of ω_k"""
    return np.array([[omega.coefficient(j) for omega in omegas] for j in range(n)], dtype=complex)


def shift_correction_inverse_expr(
    analysis: MatchingPairAnalysis, window: Optional[int] = None
) -> OperatorExpr:
    """
    Inverse for (κ₁, κ₂) = (−2n, 2n) when W_n is nonsingular.

    A = C·T(t^n) with C the operator of (a·t^{−n}, b·t^{n}); C has the right
    inverse R₁ and kernel span{ω_k}. The projection onto im T(t^n) along ker C is
    f ↦ f − Σ_k ω_k (W_n⁻¹ ê(f))_k with ê(f) = (f̂_0, …, f̂_{n−1}), so

        A⁻¹ = T(t^{−n})·(I − Σ_{k,j} (W_n⁻¹)_{kj}·E·M(v_k)·e_j)·R₁

    For n = 1 this is the rank-one formula with the factor 1/ω̂₀.
    """
    n = -analysis.kappa1 // 2
    _require_shift_indices(analysis, n)
    omegas = omega_functions(analysis, n, window)
    inverse_wn = scipy.linalg.inv(omega_matrix(omegas, n))

    transition = shifted_kernel_operator(analysis, n)
    seeds = shifted_kernel_seeds(analysis, n)
    correction_terms = []
    for k, seed in enumerate(seeds):
        extractors = add(*(scale(inverse_wn[k, j], coefficient_extractor(j)) for j in range(n)))
        correction_terms.append(compose(transition, multiply(seed), extractors))
    prefix = Identity() - add(*correction_terms)
    logger.debug("Shift correction of rank %d", n)
    return compose(
        toeplitz(RationalSymbol.monomial(-n)), prefix, right_inverse_expr(analysis.shifted(n))
    )


def build_inverse(
    analysis: MatchingPairAnalysis, clause: Clause, window: Optional[int] = None
) -> OperatorExpr:
    """
    Inverse (or one-sided/generalized inverse) expression for a decided clause.

    Raises:
        CaseUnsupported: the clause has no constructive formula
    """
    clause = Clause(clause)
    if clause in RIGHT_CLAUSES or clause == Clause.RIGHT_INVERSE:
        return right_inverse_expr(analysis)
    if clause in LEFT_CLAUSES or clause == Clause.LEFT_INVERSE:
        return left_inverse_expr(analysis)
    if clause in (Clause.SIGNATURE_VIII, Clause.GENERALIZED_INVERSE):
        return generalized_inverse_expr(analysis)
    if clause == Clause.SIGNATURE_IX:
        return signature_ix_inverse_expr(analysis)
    if clause == Clause.SHIFT_CORRECTION:
        return shift_correction_inverse_expr(analysis, window)
    raise CaseUnsupported(f"No inverse formula for clause {clause.value}")
