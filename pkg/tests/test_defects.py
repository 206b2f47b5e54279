"""Tests for defect numbers from antisymmetric factorizations"""

import numpy as np
import pytest

from tph_invert.classify.defects import (
    DefectEstimate,
    be_matrix,
    defect_numbers_be,
    rho_symbol,
)
from tph_invert.classify.kernels import cokernel, kernel
from tph_invert.core.pairs import subordinated_pair
from tph_invert.core.symbol import make_symbol
from tph_invert.errors import FactorizationUnavailable
from tests.samples import (
    SEED,
    create_constant,
    create_even_symbol,
    create_identity_plus_rank_one,
    create_monomial,
    create_random_pair,
)

WEIGHT = make_symbol({"num": {"-1": 1, "0": 2, "1": 1}})


def create_toeplitz_pair(u, v=0.3):
    """
    (β, t^{−2}·β̃) with β = (1 − ut)/(1 − vt), |v| < 1.

    H(t^{−2}·β̃) = 0, so the operator is T(β): invertible for |u| < 1 and with a
    one-dimensional cokernel for |u| > 1.
    """
    beta = make_symbol({"num": {"0": 1, "1": -u}, "den": {"0": 1, "1": -v}})
    return subordinated_pair(beta, beta.tilde().shifted(-2))


class TestDefectNumbers:
    """Tests for defect_numbers_be"""

    def test_identity_plus_rank_one(self):
        """Test I + E00: no defects"""
        estimate = defect_numbers_be(create_identity_plus_rank_one())

        assert (estimate.n, estimate.m) == (0, 0)
        assert (estimate.dim_ker, estimate.dim_coker) == (0, 0)

    def test_shift(self):
        """Test T(t): trivial kernel, one-dimensional cokernel"""
        estimate = defect_numbers_be(subordinated_pair(create_monomial(1), create_constant()))

        assert (estimate.n, estimate.m) == (1, 0)
        assert (estimate.dim_ker, estimate.dim_coker) == (0, 1)
        assert estimate.index == -1

    def test_identity_minus_rank_one(self):
        """Test I − E00 as the pair (1, −t)"""
        estimate = defect_numbers_be(subordinated_pair(create_constant(), create_monomial(1, -1.0)))

        assert (estimate.n, estimate.m) == (-1, -1)
        assert (estimate.dim_ker, estimate.dim_coker) == (1, 1)

    def test_even_pair(self):
        """Test (a, a·t²) with a = ã"""
        a = create_even_symbol()
        estimate = defect_numbers_be(subordinated_pair(a, a.shifted(2)))

        assert (estimate.n, estimate.m) == (-1, -1)
        assert (estimate.dim_ker, estimate.dim_coker) == (1, 1)

    def test_matrix_case(self):
        """Test n, m > 0 with the pair (1, t^{−2}), whose operator is I"""
        analysis = subordinated_pair(create_constant(), create_monomial(-2))
        estimate = defect_numbers_be(analysis)

        assert (estimate.n, estimate.m) == (1, 1)
        assert (estimate.dim_ker, estimate.dim_coker) == (0, 0)
        np.testing.assert_allclose(estimate.matrix, [[4.0]], atol=1e-12)

    def test_matrix_case_with_plus_factor(self):
        """Test n, m > 0 for T(β) with a nontrivial plus factor of c"""
        estimate = defect_numbers_be(create_toeplitz_pair(0.4))

        assert (estimate.n, estimate.m) == (1, 1)
        assert (estimate.dim_ker, estimate.dim_coker) == (0, 0)
        np.testing.assert_allclose(estimate.matrix, [[4.0]], atol=1e-10)

    def test_rectangular_matrix_case(self):
        """Test T(β) with one outer zero: trivial kernel, one-dimensional cokernel"""
        estimate = defect_numbers_be(create_toeplitz_pair(2.5))

        assert (estimate.n, estimate.m) == (2, 1)
        assert estimate.matrix.shape == (2, 1)
        assert (estimate.dim_ker, estimate.dim_coker) == (0, 1)
        assert estimate.index == -1

    def test_to_dict(self):
        """Test the dictionary form"""
        estimate = DefectEstimate(1, 2, 0, -1, "tilde-of-plus")

        data = estimate.to_dict()

        assert data["dim_ker"] == 1
        assert data["dim_coker"] == 2
        assert data["matrix"] is None
        assert estimate.index == -1


class TestRho:
    """Tests for ρ and the A_{n,m} matrix"""

    def test_rho_for_identity(self):
        """Test ρ = 2 + t + t^{−1} for the pair (1, t^{−2})"""
        rho = rho_symbol(subordinated_pair(create_constant(), create_monomial(-2)))

        assert rho.is_close(WEIGHT)

    def test_both_readings_agree_for_monomials(self):
        """Test that the readings agree when the plus factors are trivial"""
        analysis = subordinated_pair(create_constant(), create_monomial(-2))

        first = rho_symbol(analysis, "tilde-of-plus")
        second = rho_symbol(analysis, "plus-of-tilde")

        assert first.is_close(second)

    def test_default_reading_with_plus_factor(self):
        """Test that the tilde of the plus factor cancels b to leave (1+t)(1+t^{−1})"""
        analysis = create_toeplitz_pair(0.4)

        assert rho_symbol(analysis).is_close(WEIGHT)
        assert not rho_symbol(analysis, "plus-of-tilde").is_close(WEIGHT)

    def test_unknown_reading(self):
        """Test that unknown readings are reported"""
        with pytest.raises(ValueError, match="Available"):
            rho_symbol(create_identity_plus_rank_one(), "plus")

    def test_be_matrix_entries(self):
        """Test A_{n,m}[i, j] = ρ_{i−j} + ρ_{i+j}"""
        rho = make_symbol({"num": {"-2": 5, "-1": 4, "0": 3, "1": 2, "2": 1}})
        coefficients = {-2: 5, -1: 4, 0: 3, 1: 2, 2: 1}
        matrix = be_matrix(rho, 3, 2)

        expected = np.array(
            [
                [coefficients.get(i - j, 0) + coefficients.get(i + j, 0) for j in range(2)]
                for i in range(3)
            ]
        )
        assert matrix.shape == (3, 2)
        np.testing.assert_allclose(matrix, expected, atol=1e-10)


class TestAgainstKernels:
    """defect_numbers_be against the kernel and cokernel bases"""

    @pytest.mark.parametrize("u", [0.4, 2.5])
    def test_toeplitz_pairs(self, u):
        """Test T(β) through both constructions"""
        analysis = create_toeplitz_pair(u)
        estimate = defect_numbers_be(analysis)

        assert (estimate.dim_ker, estimate.dim_coker) == (
            kernel(analysis).dim,
            cokernel(analysis).dim,
        )

    def test_random_pairs(self):
        """Test random matching pairs that admit antisymmetric factorizations"""
        rng = np.random.default_rng(SEED)
        compared = 0
        for _ in range(8):
            analysis = create_random_pair(rng)
            try:
                estimate = defect_numbers_be(analysis)
            except FactorizationUnavailable:
                continue

            assert estimate.index == estimate.m - estimate.n
            assert (estimate.dim_ker, estimate.dim_coker) == (
                kernel(analysis).dim,
                cokernel(analysis).dim,
            )
            compared += 1

        assert compared > 0
