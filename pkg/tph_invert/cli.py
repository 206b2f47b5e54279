"""
Command line interface

Subcommands:
- analyze: classification report for T(a) ± H(b)
- kernel: kernel and cokernel bases
- inverse: inverse expression with a residual summary
- verify: dense-section oracle report (CSV of singular values with --out *.csv)
- pc-index: Fredholm conditions and index on H^p
- curve-dump: CSV of the closed curve c^{#,p} or d̃^{#,q}

A JSON run configuration (RunConfig fields) may be given with --config.
Reports go to stdout (or --out) and logs to stderr. Exit status is 0 on success,
2 on domain errors (with an error JSON) and 1 on internal failures.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from tph_invert.classify import (
    ClassificationReport,
    InvertibilityStatus,
    decide,
    defect_numbers_be,
)
from tph_invert.config import RHO_READINGS, SUBCOMMANDS, RunConfig
from tph_invert.core.pairs import MatchingPairAnalysis, subordinated_pair
from tph_invert.core.symbol import RationalSymbol, make_symbol
from tph_invert.errors import CaseUnsupported, FactorizationUnavailable, InvalidSymbolSpec, TphError
from tph_invert.exporters import CurveCSVExporter, JSONExporter, SingularValueCSVExporter
from tph_invert.operators.dense import truncate
from tph_invert.operators.expr import Identity, OperatorExpr, compose, hankel, toeplitz
from tph_invert.pc_fredholm import (
    PCSymbol,
    build_curve,
    conjugate_exponent,
    curve_windings,
    fredholm_conditions,
)
from tph_invert.verify import OracleReport, random_windows, residual, svd_defects

logger = logging.getLogger(__name__)

# Test vectors for the inverse residual summary
_RESIDUAL_VECTORS = 5
_RESIDUAL_SUPPORT = 16

# RunConfig field -> parser destination for options a --config file may set
_OPTIONS = {
    "n": "n",
    "tol": "tol",
    "p": "p",
    "output": "out",
    "rho_reading": "rho_reading",
    "seed": "seed",
    "sign": "sign",
    "curve": "curve",
    "verbose": "verbose",
}


def load_spec(value: Optional[str]) -> Optional[Dict[str, Any]]:
    """Inline JSON object or path to a JSON file"""
    if value is None:
        return None
    text = value.strip()
    try:
        if text.startswith("{"):
            data = json.loads(text)
        else:
            with open(Path(text), "r", encoding="utf-8") as handle:
                data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidSymbolSpec(f"Cannot read symbol spec {value!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidSymbolSpec(f"Symbol spec must be a JSON object, got {type(data).__name__}")
    return data


def _operator(a: RationalSymbol, b: RationalSymbol, sign: str) -> OperatorExpr:
    """T(a) ± H(b)"""
    return toeplitz(a) + hankel(b) if sign == "+" else toeplitz(a) - hankel(b)


def _pair(config: RunConfig) -> MatchingPairAnalysis:
    return subordinated_pair(make_symbol(config.symbol_a), make_symbol(config.symbol_b))


def _signed_b(analysis: MatchingPairAnalysis, sign: str) -> RationalSymbol:
    return analysis.b if sign == "+" else -analysis.b


def _analyze(config: RunConfig) -> Dict[str, Any]:
    analysis = _pair(config)
    report = decide(analysis, config.sign, config.n)
    payload = report.to_dict()
    signed = analysis if config.sign == "+" else analysis.negated()
    try:
        payload["defect_numbers_be"] = defect_numbers_be(signed, config.rho_reading).to_dict()
    except FactorizationUnavailable as exc:
        logger.warning("Antisymmetric defect numbers unavailable: %s", exc)
        payload["defect_numbers_be"] = None
    return payload


def _kernel(config: RunConfig) -> Dict[str, Any]:
    report = decide(_pair(config), config.sign, config.n)
    return {
        "kappa1": report.kappa1,
        "kappa2": report.kappa2,
        "sigma_c": report.sigma_c,
        "sigma_d": report.sigma_d,
        "operator_sign": report.operator_sign,
        "kernel": report.kernel.to_dict(),
        "cokernel": report.cokernel.to_dict(),
    }


def _inverse_checks(
    report: ClassificationReport, operator: OperatorExpr
) -> Dict[str, OperatorExpr]:
    inverse = report.inverse
    checks: Dict[str, OperatorExpr] = {}
    if report.status in (InvertibilityStatus.INVERTIBLE, InvertibilityStatus.RIGHT_INVERTIBLE):
        checks["operator_after_inverse"] = compose(operator, inverse) - Identity()
    if report.status in (InvertibilityStatus.INVERTIBLE, InvertibilityStatus.LEFT_INVERTIBLE):
        checks["inverse_after_operator"] = compose(inverse, operator) - Identity()
    if not checks:
        checks["generalized"] = compose(operator, inverse, operator) - operator
    return checks


def _inverse(config: RunConfig) -> Dict[str, Any]:
    analysis = _pair(config)
    report = decide(analysis, config.sign, config.n)
    if report.inverse is None:
        raise CaseUnsupported(
            f"No inverse formula for {report.status.value} via {report.clause.value}"
        )
    operator = _operator(analysis.a, analysis.b, config.sign)
    vectors = random_windows(_RESIDUAL_VECTORS, _RESIDUAL_SUPPORT, config.seed)
    residuals = residual(_inverse_checks(report, operator), vectors, config.n)
    return {
        "status": report.status.value,
        "clause": report.clause.value,
        "inverse": report.inverse.to_dict(),
        "description": report.inverse.describe(),
        "residuals": residuals,
        "max_residual": max(residuals.values()),
        "within_tol": max(residuals.values()) <= config.tol,
    }


def _verify(config: RunConfig) -> OracleReport:
    analysis = _pair(config)
    report = decide(analysis, config.sign, config.n)
    b = _signed_b(analysis, config.sign)
    oracle = svd_defects(
        truncate(analysis.a, b, config.n, margin=config.n // 4),
        (report.dim_ker, report.dim_coker),
        config.tol,
    )
    operator = _operator(analysis.a, analysis.b, config.sign)
    adjoint_operator = _operator(analysis.a.bar(), analysis.b.tilde().bar(), config.sign)
    if report.kernel.dim:
        oracle.residuals.update(residual({"kernel": operator}, report.kernel.elements, config.n))
    if report.cokernel.dim:
        oracle.residuals.update(
            residual({"cokernel": adjoint_operator}, report.cokernel.elements, config.n)
        )
    return oracle


def _pc_inputs(config: RunConfig) -> Tuple[PCSymbol, PCSymbol]:
    if config.symbol_c is not None and config.symbol_d_tilde is not None:
        return PCSymbol.from_dict(config.symbol_c), PCSymbol.from_dict(config.symbol_d_tilde)
    analysis = _pair(config)
    if config.sign == "-":
        analysis = analysis.negated()
    return PCSymbol.from_rational(analysis.c), PCSymbol.from_rational(analysis.d.tilde())


def _pc_index(config: RunConfig) -> Dict[str, Any]:
    c, d_tilde = _pc_inputs(config)
    verdict = fredholm_conditions(c, d_tilde, config.p)
    payload: Dict[str, Any] = {
        "fredholm": verdict.fredholm,
        "violated_clauses": list(verdict.violated),
        "checks": [check.to_dict() for check in verdict.checks],
        "p": config.p,
        "q": conjugate_exponent(config.p),
        "index": None,
        "wind_c": None,
        "wind_d_tilde": None,
    }
    if verdict.fredholm:
        wind_c, wind_d = curve_windings(c, d_tilde, config.p)
        payload.update(index=wind_d - wind_c, wind_c=wind_c, wind_d_tilde=wind_d)
    return payload


def _curve_dump(config: RunConfig) -> str:
    c, d_tilde = _pc_inputs(config)
    if config.curve == "c":
        curve = build_curve(c, config.p)
    else:
        curve = build_curve(d_tilde, conjugate_exponent(config.p))
    return CurveCSVExporter().export(curve, config.output)


def run(config: RunConfig) -> Tuple[int, str]:
    """
    Execute one subcommand.

    Returns:
        (exit status, report text)
    """
    try:
        config.validate()
        if config.subcommand == "curve-dump":
            return 0, _curve_dump(config)
        if config.subcommand == "verify":
            oracle = _verify(config)
            if config.output and config.output.endswith(".csv"):
                return 0, SingularValueCSVExporter().export([oracle], config.output)
            return 0, JSONExporter().export(oracle, config.output)
        handlers = {
            "analyze": _analyze,
            "kernel": _kernel,
            "inverse": _inverse,
            "pc-index": _pc_index,
        }
        return 0, JSONExporter().export(handlers[config.subcommand](config), config.output)
    except TphError as exc:
        logger.error("%s: %s", exc.code, exc)
        return 2, JSONExporter().render({"error": exc.to_dict()})
    except Exception as exc:  # noqa: BLE001
        logger.exception("Internal failure")
        return 1, JSONExporter().render({"error": {"code": "INTERNAL", "message": str(exc)}})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tph-invert",
        description="Invertibility of Toeplitz plus Hankel operators with rational symbols",
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--a", help="Symbol a: inline JSON or path to a JSON file")
    parser.add_argument("--b", help="Symbol b: inline JSON or path to a JSON file")
    parser.add_argument("--c", help="PC data for c (pc-index, curve-dump)")
    parser.add_argument("--d-tilde", dest="d_tilde", help="PC data for d̃ (pc-index, curve-dump)")
    parser.add_argument("--n", type=int, default=256, help="Truncation / window size")
    parser.add_argument("--tol", type=float, default=1e-8, help="Oracle tolerance")
    parser.add_argument("--p", type=float, default=2.0, help="Exponent of H^p")
    parser.add_argument("--out", help="Output path (default stdout)")
    parser.add_argument("--rho-reading", dest="rho_reading", choices=RHO_READINGS,
                        default="tilde-of-plus")
    parser.add_argument("--seed", type=lambda s: int(s, 0), default=0x5EED)
    parser.add_argument("--sign", choices=("+", "-"), default="+",
                        help="Analyze T(a)+H(b) or T(a)-H(b)")
    parser.add_argument("--curve", choices=("c", "d_tilde"), default="c")
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--config", help="JSON run configuration (options override it)")
    return parser


def _spec(value: Optional[str], fallback: Optional[Dict[str, Any]]) -> Optional[Dict[str, Any]]:
    return fallback if value is None else load_spec(value)


def _load_config(parser: argparse.ArgumentParser, argv: Optional[Sequence[str]]) -> RunConfig:
    """Run configuration from --config, overridden by options given on the command line"""
    args = parser.parse_args(argv)
    base = RunConfig()
    if args.config:
        base = RunConfig.from_json(args.config)
        parser.set_defaults(**{option: getattr(base, name) for name, option in _OPTIONS.items()})
        args = parser.parse_args(argv)
    return RunConfig(
        subcommand=args.subcommand,
        symbol_a=_spec(args.a, base.symbol_a),
        symbol_b=_spec(args.b, base.symbol_b),
        symbol_c=_spec(args.c, base.symbol_c),
        symbol_d_tilde=_spec(args.d_tilde, base.symbol_d_tilde),
        n=args.n,
        tol=args.tol,
        p=args.p,
        output=args.out,
        rho_reading=args.rho_reading,
        seed=args.seed,
        sign=args.sign,
        curve=args.curve,
        verbose=args.verbose,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = _load_config(build_parser(), argv)
    except TphError as exc:
        sys.stdout.write(JSONExporter().render({"error": exc.to_dict()}))
        return 2
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    status, text = run(config)
    if status != 0 or not config.output:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
