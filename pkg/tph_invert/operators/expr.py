"""
Operator expression trees

Inverses, transition operators and projections are returned as trees of
elementary operators on two-sided coefficient sequences:

- Identity, Scale (scalar multiple of the identity)
- Compose (applied right to left), Sum
- Toeplitz T(g) = P·M(g)·P, Hankel H(g) = P·M(g)·J·P, MulSymbol M(g)
- ProjP (keep n ≥ 0), ProjQ (keep n < 0), Flip J (n → −n−1), Power (multiply by t^m)

Trees are immutable, compare by value and serialize to JSON.
"""

from dataclasses import dataclass
from typing import Any, ClassVar, Dict, Iterator, Mapping, Tuple, Union

from tph_invert.core.encoding import complex_from_json, complex_to_json
from tph_invert.core.symbol import RationalSymbol, make_symbol

Scalar = Union[int, float, complex]


class OperatorExpr:
    """Base class for expression nodes"""

    kind: ClassVar[str] = "expr"

    def children(self) -> Tuple["OperatorExpr", ...]:
        return ()

    def symbols(self) -> Iterator[RationalSymbol]:
        """All symbols referenced in the tree"""
        for child in self.children():
            yield from child.symbols()

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"kind": self.kind}

    def describe(self) -> str:
        return self.kind

    def __matmul__(self, other: "OperatorExpr") -> "OperatorExpr":
        return compose(self, other)

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return add(self, other)

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return add(self, scale(-1.0, other))

    def __neg__(self) -> "OperatorExpr":
        return scale(-1.0, self)

    def __rmul__(self, factor: Scalar) -> "OperatorExpr":
        return scale(factor, self)


@dataclass(frozen=True)
class Identity(OperatorExpr):
    kind: ClassVar[str] = "identity"

    def describe(self) -> str:
        return "I"


@dataclass(frozen=True)
class Scale(OperatorExpr):
    """factor·I"""

    factor: complex
    kind: ClassVar[str] = "scale"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "factor": complex_to_json(self.factor)}

    def describe(self) -> str:
        return f"{complex(self.factor):.6g}"


@dataclass(frozen=True)
class Compose(OperatorExpr):
    """factors[0] ∘ factors[1] ∘ …, so the last factor acts first"""

    factors: Tuple[OperatorExpr, ...]
    kind: ClassVar[str] = "compose"

    def children(self) -> Tuple[OperatorExpr, ...]:
        return self.factors

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "factors": [f.to_dict() for f in self.factors]}

    def describe(self) -> str:
        return "·".join(_bracketed(f) for f in self.factors)


@dataclass(frozen=True)
class Sum(OperatorExpr):
    terms: Tuple[OperatorExpr, ...]
    kind: ClassVar[str] = "sum"

    def children(self) -> Tuple[OperatorExpr, ...]:
        return self.terms

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "terms": [t.to_dict() for t in self.terms]}

    def describe(self) -> str:
        return " + ".join(t.describe() for t in self.terms)


@dataclass(frozen=True)
class _SymbolNode(OperatorExpr):
    symbol: RationalSymbol
    label: ClassVar[str] = "?"

    def symbols(self) -> Iterator[RationalSymbol]:
        yield self.symbol

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "symbol": self.symbol.to_dict()}

    def describe(self) -> str:
        return f"{self.label}(g[{self.symbol.degree}])"


@dataclass(frozen=True)
class Toeplitz(_SymbolNode):
    kind: ClassVar[str] = "toeplitz"
    label: ClassVar[str] = "T"


@dataclass(frozen=True)
class Hankel(_SymbolNode):
    kind: ClassVar[str] = "hankel"
    label: ClassVar[str] = "H"


@dataclass(frozen=True)
class MulSymbol(_SymbolNode):
    kind: ClassVar[str] = "multiply"
    label: ClassVar[str] = "M"


@dataclass(frozen=True)
class ProjP(OperatorExpr):
    kind: ClassVar[str] = "proj_p"

    def describe(self) -> str:
        return "P"


@dataclass(frozen=True)
class ProjQ(OperatorExpr):
    kind: ClassVar[str] = "proj_q"

    def describe(self) -> str:
        return "Q"


@dataclass(frozen=True)
class Flip(OperatorExpr):
    kind: ClassVar[str] = "flip"

    def describe(self) -> str:
        return "J"


@dataclass(frozen=True)
class Power(OperatorExpr):
    """Multiplication by t^exponent"""

    exponent: int
    kind: ClassVar[str] = "power"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "exponent": self.exponent}

    def describe(self) -> str:
        return f"t^{self.exponent}"


def _bracketed(expr: OperatorExpr) -> str:
    text = expr.describe()
    return f"({text})" if isinstance(expr, Sum) else text


# -- builders ---------------------------------------------------------------


def compose(*ops: OperatorExpr) -> OperatorExpr:
    """Flattened composition; identities dropped, scalars collected in front"""
    factor: complex = 1.0
    flat = []
    for op in ops:
        parts = op.factors if isinstance(op, Compose) else (op,)
        for part in parts:
            if isinstance(part, Identity):
                continue
            if isinstance(part, Scale):
                factor *= part.factor
                continue
            flat.append(part)
    if factor == 0:
        return Scale(0.0)
    if factor != 1:
        flat.insert(0, Scale(factor))
    if not flat:
        return Identity()
    if len(flat) == 1:
        return flat[0]
    return Compose(tuple(flat))


def add(*ops: OperatorExpr) -> OperatorExpr:
    """Flattened sum; zero terms dropped"""
    terms = []
    for op in ops:
        parts = op.terms if isinstance(op, Sum) else (op,)
        terms.extend(p for p in parts if not (isinstance(p, Scale) and p.factor == 0))
    if not terms:
        return Scale(0.0)
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


def scale(factor: Scalar, op: OperatorExpr) -> OperatorExpr:
    return compose(Scale(complex(factor)), op)


def _constant_or(node: type, g: RationalSymbol, zero_when_constant: bool) -> OperatorExpr:
    if g.is_constant:
        if zero_when_constant:
            return Scale(0.0)
        return Identity() if g.gain == 1 else Scale(g.gain)
    return node(g)


def toeplitz(g: RationalSymbol) -> OperatorExpr:
    """T(g), with constants reduced to scalars"""
    return _constant_or(Toeplitz, g, zero_when_constant=False)


def hankel(g: RationalSymbol) -> OperatorExpr:
    """H(g); the Hankel operator of a constant is zero"""
    return _constant_or(Hankel, g, zero_when_constant=True)


def multiply(g: RationalSymbol) -> OperatorExpr:
    return _constant_or(MulSymbol, g, zero_when_constant=False)


def coefficient_extractor(j: int) -> OperatorExpr:
    """f ↦ f̂_j·1, the j-th coefficient placed at index 0"""
    return compose(Power(1), ProjQ(), Power(-1), ProjP(), Power(-j))


_LEAVES = {
    "identity": Identity,
    "proj_p": ProjP,
    "proj_q": ProjQ,
    "flip": Flip,
}
_SYMBOL_NODES = {"toeplitz": Toeplitz, "hankel": Hankel, "multiply": MulSymbol}


def expr_from_dict(data: Mapping[str, Any]) -> OperatorExpr:
    """Rebuild an expression from its dictionary form"""
    kind = data.get("kind")
    if kind in _LEAVES:
        return _LEAVES[kind]()
    if kind in _SYMBOL_NODES:
        return _SYMBOL_NODES[kind](make_symbol(data["symbol"]))
    if kind == "scale":
        return Scale(complex_from_json(data["factor"]))
    if kind == "power":
        return Power(int(data["exponent"]))
    if kind == "compose":
        return Compose(tuple(expr_from_dict(f) for f in data["factors"]))
    if kind == "sum":
        return Sum(tuple(expr_from_dict(t) for t in data["terms"]))
    available = sorted(list(_LEAVES) + list(_SYMBOL_NODES) + ["scale", "power", "compose", "sum"])
    raise ValueError(f"Unknown expression kind: {kind}. Available: {available}")
