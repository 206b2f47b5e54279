"""Tests for invertibility decisions"""

import numpy as np
import pytest

from tph_invert.classify.decision import (
    ClassificationReport,
    InvertibilityStatus,
    coburn_simonenko_forms,
    decide,
    match_sufficient_clause,
    necessary_conditions,
)
from tph_invert.classify.kernels import cokernel, kernel
from tph_invert.core.pairs import subordinated_pair
from tph_invert.operators.expr import Identity, compose, hankel, toeplitz
from tph_invert.operators.inverses import Clause
from tph_invert.operators.window import apply
from tph_invert.verify.oracle import random_windows
from tests.samples import (
    SEED,
    create_constant,
    create_gamma_pair,
    create_gamma_symbol,
    create_identity_plus_rank_one,
    create_monomial,
    create_random_pair,
    create_random_symbol,
    create_signature_ix_pair,
)


def max_residual(expr):
    """Largest sup-norm of expr over a few random vectors"""
    return max(apply(expr, v).sup_norm() for v in random_windows(3, 12, SEED))


class TestClauseTable:
    """Tests for match_sufficient_clause and necessary_conditions"""

    @pytest.mark.parametrize(
        "indices,signatures,clause",
        [
            ((0, 0), (1, -1), Clause.SIGNATURE_I),
            ((1, 0), (1, -1), Clause.SIGNATURE_II),
            ((1, 0), (-1, 1), None),
            ((0, 1), (1, -1), Clause.SIGNATURE_III),
            ((1, 1), (1, -1), Clause.SIGNATURE_IV),
            ((0, -1), (-1, 1), Clause.SIGNATURE_V),
            ((-1, 0), (-1, -1), Clause.SIGNATURE_VI),
            ((-1, -1), (-1, 1), Clause.SIGNATURE_VII),
            ((-1, -1), (1, 1), None),
            ((1, -1), (1, 1), Clause.SIGNATURE_VIII),
            ((-1, 1), (-1, -1), Clause.SIGNATURE_IX),
            ((-1, 1), (1, 1), None),
            ((2, 0), (1, 1), None),
        ],
    )
    def test_signature_clauses(self, indices, signatures, clause):
        """Test each entry of the sufficient-condition table"""
        assert match_sufficient_clause(*indices, *signatures) == clause

    def test_index_bound(self):
        """Test the bound |κ| ≤ 1 outside κ₁ < 0 < κ₂"""
        assert necessary_conditions(0, 0, 1, 1) == {"index-bound": True}
        assert necessary_conditions(2, 0, 1, 1) == {"index-bound": False}
        assert necessary_conditions(-1, -2, 1, 1) == {"index-bound": False}

    def test_parity_relations(self):
        """Test the four parity relations"""
        assert necessary_conditions(-2, 2, 1, 1) == {"parity-even-even": True}
        assert necessary_conditions(-2, 4, 1, 1) == {"parity-even-even": False}
        assert necessary_conditions(-1, 2, 1, 1) == {"parity-odd-even": True}
        assert necessary_conditions(-2, 1, 1, 1) == {"parity-even-odd": True}
        assert necessary_conditions(-1, 1, -1, -1) == {"parity-odd-odd": True}
        assert necessary_conditions(-1, 3, 1, -1) == {"parity-odd-odd": True}
        assert necessary_conditions(-1, 3, 1, 1) == {"parity-odd-odd": False}


class TestDecide:
    """Tests for decide"""

    def test_signature_viii(self):
        """Test I + E00: invertible with inverse I − E00/2"""
        analysis = create_identity_plus_rank_one()
        report = decide(analysis)
        operator = toeplitz(analysis.a) + hankel(analysis.b)

        assert report.status == InvertibilityStatus.INVERTIBLE
        assert report.clause == Clause.SIGNATURE_VIII
        assert (report.dim_ker, report.dim_coker) == (0, 0)
        assert max_residual(compose(operator, report.inverse) - Identity()) < 1e-8

    def test_minus_sign(self):
        """Test I − E00: generalized invertible with one-dimensional defects"""
        report = decide(create_identity_plus_rank_one(), "-")

        assert report.status == InvertibilityStatus.GENERALIZED_INVERTIBLE
        assert report.clause == Clause.GENERALIZED_INVERSE
        assert (report.dim_ker, report.dim_coker) == (1, 1)
        assert report.operator_sign == "-"
        assert report.index == 0

    def test_shift(self):
        """Test T(t): left invertible"""
        report = decide(subordinated_pair(create_monomial(1), create_constant()))

        assert report.status == InvertibilityStatus.LEFT_INVERTIBLE
        assert report.clause == Clause.LEFT_INVERSE
        assert (report.dim_ker, report.dim_coker) == (0, 1)

    def test_signature_one(self):
        """Test the pair (a, a)"""
        a = create_gamma_symbol(0.5)
        report = decide(subordinated_pair(a, a))

        assert report.status == InvertibilityStatus.INVERTIBLE
        assert report.clause == Clause.SIGNATURE_I

    def test_signature_ix(self):
        """Test the (−1, 1) sample"""
        report = decide(create_signature_ix_pair())

        assert report.status == InvertibilityStatus.INVERTIBLE
        assert report.clause == Clause.SIGNATURE_IX
        assert report.inverse is not None

    def test_shift_correction(self):
        """Test the gamma pair through W₁"""
        analysis = create_gamma_pair(0.5)
        report = decide(analysis)
        operator = toeplitz(analysis.a) + hankel(analysis.b)

        assert report.clause == Clause.SHIFT_CORRECTION
        assert report.status == InvertibilityStatus.INVERTIBLE
        assert report.wn_determinant == pytest.approx(0.75, abs=1e-10)
        assert max_residual(compose(operator, report.inverse) - Identity()) < 1e-8

    @pytest.mark.parametrize("gamma", [0.1, 0.3, 0.7, 0.9])
    def test_shift_correction_gamma_family(self, gamma):
        """Test that T(a) + H(a·t^{−2}) is invertible for every γ in (0, 1)"""
        report = decide(create_gamma_pair(gamma))

        assert report.clause == Clause.SHIFT_CORRECTION
        assert report.status == InvertibilityStatus.INVERTIBLE
        assert (report.dim_ker, report.dim_coker) == (0, 0)

    def test_necessary_conditions_violated(self):
        """Test T(t^{−1}) + H(t^{−3}) = T(t^{−1}): right invertible only"""
        report = decide(subordinated_pair(create_monomial(-1), create_monomial(-3)))

        assert (report.kappa1, report.kappa2) == (-2, 4)
        assert report.clause == Clause.NECESSARY_VIOLATED
        assert report.status == InvertibilityStatus.RIGHT_INVERTIBLE
        assert (report.dim_ker, report.dim_coker) == (1, 0)

    def test_undetermined(self):
        """Test an odd configuration that passes the necessary conditions"""
        report = decide(subordinated_pair(create_constant(), create_monomial(-3)))

        assert (report.kappa1, report.kappa2) == (-3, 3)
        assert report.clause == Clause.NECESSARY_ONLY
        assert report.status == InvertibilityStatus.UNDETERMINED
        assert report.inverse is None
        assert all(report.necessary.values())

    def test_report_dict_form(self):
        """Test that the dictionary form rebuilds the report"""
        report = decide(create_identity_plus_rank_one(), "-")

        rebuilt = ClassificationReport.from_dict(report.to_dict())

        assert rebuilt.status == report.status
        assert rebuilt.clause == report.clause
        assert rebuilt.kernel.dim == report.kernel.dim
        assert rebuilt.inverse == report.inverse
        assert rebuilt.operator_sign == "-"


class TestCoburnSimonenko:
    """Tests for the four operators with a trivial kernel or cokernel"""

    def test_one_side_trivial(self):
        """Test that each form has trivial kernel or trivial cokernel"""
        a = create_gamma_symbol(0.5).shifted(1)
        forms = coburn_simonenko_forms(a)

        assert set(forms) == {"T(a)+H(a)", "T(a)-H(a)", "T(a)-H(at^-1)", "T(a)+H(at)"}
        for analysis, sign in forms.values():
            report = decide(analysis, sign)
            assert report.dim_ker == 0 or report.dim_coker == 0

    @pytest.mark.slow
    def test_one_side_trivial_random_symbols(self):
        """Test the four forms built from 100 random symbols"""
        rng = np.random.default_rng(SEED)
        for _ in range(100):
            a = create_random_symbol(rng)
            for name, (analysis, sign) in coburn_simonenko_forms(a).items():
                dims = (kernel(analysis, sign).dim, cokernel(analysis, sign).dim)
                assert min(dims) == 0, (name, a, dims)


class TestRandomCorpus:
    """Invariants of decide over random matching pairs"""

    def test_index_sum(self):
        """Test ind(T(a)+H(b)) + ind(T(a)−H(b)) = κ₁ + κ₂"""
        rng = np.random.default_rng(SEED)
        for _ in range(8):
            analysis = create_random_pair(rng)
            plus = decide(analysis, "+")
            minus = decide(analysis, "-")

            assert plus.index + minus.index == analysis.kappa1 + analysis.kappa2

    def test_invertible_verdicts_respect_necessary_conditions(self):
        """Test that no invertible verdict violates a necessary condition"""
        rng = np.random.default_rng(SEED)
        for _ in range(8):
            report = decide(create_random_pair(rng))
            if report.status == InvertibilityStatus.INVERTIBLE:
                assert all(report.necessary.values())
                assert (report.dim_ker, report.dim_coker) == (0, 0)
