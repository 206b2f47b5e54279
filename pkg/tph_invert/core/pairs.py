"""
Matching pairs and their subordinated pairs

A pair (a, b) of symbols invertible on 𝕋 is matching when a·ã = b·b̃. Its
subordinated pair is (c, d) = (a/b, a/b̃); both are matching functions, and their
Toeplitz indices κ₁, κ₂ and signatures drive the whole classification.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict

from tph_invert.core.factorization import MatchingFactorization, matching_factorization
from tph_invert.core.symbol import RationalSymbol, winding_number
from tph_invert.errors import NotMatching, SymbolNotInvertibleOnCircle, TphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingPairAnalysis:
    """A matching pair with its subordinated pair, indices and signatures"""

    a: RationalSymbol
    b: RationalSymbol
    c: RationalSymbol
    d: RationalSymbol
    kappa1: int
    kappa2: int
    sigma_c: int
    sigma_d: int
    c_factors: MatchingFactorization
    d_factors: MatchingFactorization

    @property
    def indices(self) -> tuple:
        return (self.kappa1, self.kappa2)

    @property
    def signatures(self) -> tuple:
        return (self.sigma_c, self.sigma_d)

    def adjoint(self) -> "MatchingPairAnalysis":
        """Pair of the adjoint operator: (ā, conj(b̃))"""
        return subordinated_pair(self.a.bar(), self.b.tilde().bar())

    def negated(self) -> "MatchingPairAnalysis":
        """Pair of T(a) − H(b)"""
        return subordinated_pair(self.a, -self.b)

    def shifted(self, n: int) -> "MatchingPairAnalysis":
        """Pair (a·t^{−n}, b·t^{n}); T(a)+H(b) equals its operator times T(t^n)"""
        return subordinated_pair(self.a.shifted(-n), self.b.shifted(n))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "a": self.a.to_dict(),
            "b": self.b.to_dict(),
            "c": self.c.to_dict(),
            "d": self.d.to_dict(),
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
            "sigma_c": self.sigma_c,
            "sigma_d": self.sigma_d,
        }


def _require_invertible(name: str, g: RationalSymbol) -> None:
    try:
        winding_number(g)
    except TphError as exc:
        raise SymbolNotInvertibleOnCircle(f"{name} is not invertible on 𝕋: {exc}") from exc


def subordinated_pair(a: RationalSymbol, b: RationalSymbol) -> MatchingPairAnalysis:
    """
    Check that (a, b) is matching and compute (c, d), (κ₁, κ₂) and the signatures.

    Raises:
        SymbolNotInvertibleOnCircle: a or b vanishes or has a pole on 𝕋
        NotMatching: a·ã and b·b̃ differ
    """
    _require_invertible("a", a)
    _require_invertible("b", b)
    if not (a * a.tilde()).is_close(b * b.tilde()):
        raise NotMatching("a·ã and b·b̃ differ")

    c = (a / b).checked()
    d = (a / b.tilde()).checked()
    c_factors = matching_factorization(c)
    d_factors = matching_factorization(d)
    analysis = MatchingPairAnalysis(
        a=a,
        b=b,
        c=c,
        d=d,
        kappa1=-winding_number(c),
        kappa2=-winding_number(d),
        sigma_c=c_factors.sigma,
        sigma_d=d_factors.sigma,
        c_factors=c_factors,
        d_factors=d_factors,
    )
    logger.debug(
        "Subordinated pair: kappa=(%d, %d), sigma=(%d, %d)",
        analysis.kappa1,
        analysis.kappa2,
        analysis.sigma_c,
        analysis.sigma_d,
    )
    return analysis
