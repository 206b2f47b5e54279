"""
Error hierarchy for tph_invert

Every failure raised by the library derives from TphError, which is a ValueError
so callers that only know about bad input still catch it. Each class carries a
stable ``code`` that the CLI reports in its error JSON.

Groups:
- Symbol construction: PoleOnCircle, ZeroOnCircle, ZeroGain, EvalAtPole, InvalidSymbolSpec
- Pairs and factorization: NotMatching, SymbolNotInvertibleOnCircle, NotMatchingFunction,
  SignatureNotUnimodular, FactorizationUnavailable
- Operators: WrongIndexForSide, CaseUnsupported, TruncationTooSmall
- Classification: NotInKernel, WrongIndices
- Piecewise continuous data: CurveThroughOrigin
- Configuration: InvalidConfig
"""

from typing import Any, Dict


class TphError(ValueError):
    """Base class for every domain error"""

    code = "TPH_ERROR"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the CLI error payload"""
        return {"code": self.code, "message": str(self)}


class PoleOnCircle(TphError):
    code = "POLE_ON_CIRCLE"


class ZeroOnCircle(TphError):
    code = "ZERO_ON_CIRCLE"


class ZeroGain(TphError):
    code = "ZERO_GAIN"


class EvalAtPole(TphError):
    code = "EVAL_AT_POLE"


class InvalidSymbolSpec(TphError):
    code = "INVALID_SYMBOL_SPEC"


class NotMatching(TphError):
    """a·ã and b·b̃ differ"""

    code = "NOT_MATCHING"


class SymbolNotInvertibleOnCircle(TphError):
    code = "SYMBOL_NOT_INVERTIBLE_ON_CIRCLE"


class NotMatchingFunction(TphError):
    """g·g̃ is not identically one"""

    code = "NOT_MATCHING_FUNCTION"


class SignatureNotUnimodular(TphError):
    code = "SIGNATURE_NOT_UNIMODULAR"


class FactorizationUnavailable(TphError):
    code = "FACTORIZATION_UNAVAILABLE"


class WrongIndexForSide(TphError):
    code = "WRONG_INDEX_FOR_SIDE"


class CaseUnsupported(TphError):
    code = "CASE_UNSUPPORTED"


class TruncationTooSmall(TphError):
    code = "TRUNCATION_TOO_SMALL"


class NotInKernel(TphError):
    code = "NOT_IN_KERNEL"


class WrongIndices(TphError):
    code = "WRONG_INDICES"


class CurveThroughOrigin(TphError):
    code = "CURVE_THROUGH_ORIGIN"


class InvalidConfig(TphError):
    code = "INVALID_CONFIG"
