"""Tests for rational symbols"""

import numpy as np
import pytest

from tph_invert.config import Tolerances, set_tolerances
from tph_invert.core.encoding import complex_from_json
from tph_invert.core.symbol import (
    CoeffWindow,
    RationalSymbol,
    compose,
    evaluate,
    fourier_coefficients,
    involution,
    make_symbol,
    winding_number,
)
from tph_invert.errors import (
    EvalAtPole,
    InvalidSymbolSpec,
    PoleOnCircle,
    ZeroGain,
    ZeroOnCircle,
)
from tests.samples import create_even_symbol, create_gamma_symbol, create_monomial


class TestConstruction:
    """Tests for canonical construction"""

    def test_zero_pole_gain_and_laurent_agree(self):
        """Test that both spec forms give the same function"""
        zpg = make_symbol({"gain": 1, "zeros": [2]})
        laurent = make_symbol({"num": {"1": 1, "0": -2}})

        assert zpg.is_close(laurent)

    def test_zero_at_origin_raises_power(self):
        """Test that zeros and poles at the origin fold into the power"""
        g = RationalSymbol.build(1.0, 0, [0.0, 3.0], [0.0, 0.0])

        assert g.power == -1
        assert g.zeros == (3.0,)
        assert g.poles == ()

    def test_cancellation(self):
        """Test that a zero equal to a pole cancels"""
        g = RationalSymbol.build(2.0, 0, [0.5], [0.5])

        assert g.is_constant
        assert g.gain == 2.0

    def test_roots_sorted_by_modulus(self):
        """Test canonical ordering of the zeros"""
        g = make_symbol({"zeros": [3.0, 0.5, -2.0]})

        assert [abs(z) for z in g.zeros] == [0.5, 2.0, 3.0]

    def test_pole_on_circle_rejected(self):
        """Test that a pole on the unit circle is an error"""
        with pytest.raises(PoleOnCircle):
            make_symbol({"poles": [[0, 1]]})

    def test_zero_gain_rejected(self):
        """Test that a vanishing gain is an error"""
        with pytest.raises(ZeroGain):
            make_symbol({"gain": 0})
        with pytest.raises(ZeroGain):
            make_symbol({"num": {"0": 0}})

    def test_unknown_field_rejected(self):
        """Test that unknown spec fields are reported"""
        with pytest.raises(InvalidSymbolSpec, match="Unknown symbol fields"):
            make_symbol({"gain": 1, "zeroes": [2]})

    def test_bad_power_rejected(self):
        """Test that a non-integer power is reported"""
        with pytest.raises(InvalidSymbolSpec):
            make_symbol({"power": "two"})

    def test_error_codes(self):
        """Test the stable error codes used by the CLI"""
        with pytest.raises(PoleOnCircle) as info:
            make_symbol({"poles": [-1]})

        assert info.value.to_dict()["code"] == "POLE_ON_CIRCLE"

    def test_complex_encodings(self):
        """Test every accepted complex encoding"""
        assert complex_from_json(2) == 2
        assert complex_from_json([1, -2]) == 1 - 2j
        assert complex_from_json({"re": 0.5, "im": 1}) == 0.5 + 1j
        assert complex_from_json("1 - 2j") == 1 - 2j
        with pytest.raises(InvalidSymbolSpec):
            complex_from_json(True)
        with pytest.raises(InvalidSymbolSpec):
            complex_from_json("one")

    def test_to_dict_rebuilds_symbol(self):
        """Test that the dictionary form rebuilds the same symbol"""
        g = create_gamma_symbol(0.3)

        assert RationalSymbol.from_dict(g.to_dict()).is_close(g)


class TestAlgebra:
    """Tests for products, flips and conjugates"""

    def test_tilde_of_monomial(self):
        """Test g(1/t) for t^2"""
        assert create_monomial(2).tilde().is_close(create_monomial(-2))

    def test_tilde_of_gamma_symbol_is_inverse(self):
        """Test that the gamma symbol satisfies a·ã = 1"""
        a = create_gamma_symbol()

        assert (a * a.tilde()).is_one()
        assert involution("tilde", a).is_close(a.inverse())

    def test_tilde_is_involution(self):
        """Test that flipping twice returns the symbol"""
        g = make_symbol({"gain": [1, 2], "power": 3, "zeros": [0.4, [0, 3]], "poles": [2.5]})

        assert g.tilde().tilde().is_close(g)

    def test_tilde_values(self):
        """Test g̃(t) = g(1/t) pointwise"""
        g = make_symbol({"gain": 2, "power": -1, "zeros": [0.4], "poles": [[1.5, 1.0]]})
        t = np.exp(1j * np.linspace(0.1, 6.0, 7))

        np.testing.assert_allclose(g.tilde()(t), g(1.0 / t), rtol=1e-12)

    def test_bar_is_conjugate_on_circle(self):
        """Test that bar agrees with complex conjugation on the circle"""
        g = make_symbol({"gain": [1, 1], "zeros": [[0.3, 0.2]], "poles": [[0, 2]]})
        t = np.exp(1j * np.linspace(0.0, 6.0, 9))

        np.testing.assert_allclose(involution("bar", g)(t), np.conj(g(t)), rtol=1e-12)

    def test_bar_of_real_symbol_is_tilde(self):
        """Test that real coefficients make bar and tilde coincide"""
        a = create_gamma_symbol()

        assert a.bar().is_close(a.tilde())

    def test_compose(self):
        """Test canonical products and quotients"""
        a = create_gamma_symbol()

        assert compose("mul", a, a.inverse()).is_one()
        assert compose("div", a, a).is_one()
        with pytest.raises(ValueError, match="Available"):
            compose("pow", a, a)

    def test_is_close_with_numerical_double_root(self):
        """Test equality when Laurent input splits a double root"""
        from_roots = RationalSymbol.build(0.25, 0, [2.0, 2.0])
        from_laurent = make_symbol({"num": {"0": 1, "1": -1, "2": 0.25}})

        assert from_laurent.is_close(from_roots)


class TestEvaluation:
    """Tests for values and winding numbers"""

    def test_evaluate(self):
        """Test values of the gamma symbol"""
        a = create_gamma_symbol(0.5)

        assert evaluate(a, 1.0) == pytest.approx(1.0)
        assert evaluate(a, -1.0) == pytest.approx(1.0)
        assert evaluate(a, 0.25) == pytest.approx(-1.0 / 0.875)
        assert evaluate(a, 0.5) == pytest.approx(0.0)

    def test_evaluate_at_pole(self):
        """Test that evaluating at a pole is an error"""
        with pytest.raises(EvalAtPole):
            evaluate(create_gamma_symbol(0.5), 2.0)
        with pytest.raises(EvalAtPole):
            evaluate(create_monomial(-1), 0.0)

    def test_winding_numbers(self):
        """Test winding numbers from zero and pole counts"""
        assert winding_number(create_monomial(2)) == 2
        assert winding_number(create_monomial(-3)) == -3
        assert winding_number(create_gamma_symbol()) == 0
        assert winding_number(create_even_symbol()) == 0
        assert winding_number(make_symbol({"zeros": [0.5, 0.2], "poles": [3.0]})) == 2

    def test_winding_with_zero_on_circle(self):
        """Test that a zero on the circle has no winding number"""
        with pytest.raises(ZeroOnCircle):
            winding_number(make_symbol({"zeros": [1.0]}))


class TestFourierCoefficients:
    """Tests for exact Fourier coefficients"""

    def test_outer_pole(self):
        """Test 1/(1 − t/2) = Σ 2^{−n} t^n"""
        g = make_symbol({"den": {"0": 1, "1": -0.5}})
        window = fourier_coefficients(g, -3, 6)

        expected = [0.0] * 3 + [0.5**n for n in range(7)]
        np.testing.assert_allclose(window.coeffs, expected, atol=1e-15)

    def test_inner_pole(self):
        """Test 1/(1 − 1/(2t)) = Σ 2^{−k} t^{−k}"""
        g = make_symbol({"den": {"0": 1, "-1": -0.5}})
        window = fourier_coefficients(g, -5, 2)

        expected = [0.5**k for k in range(5, -1, -1)] + [0.0, 0.0]
        np.testing.assert_allclose(window.coeffs, expected, atol=1e-15)

    def test_double_pole(self):
        """Test 1/(1 − t/2)^2 = Σ (n+1)·2^{−n} t^n"""
        g = RationalSymbol.build(4.0, 0, [], [2.0, 2.0])
        window = fourier_coefficients(g, 0, 10)

        expected = [(n + 1) * 0.5**n for n in range(11)]
        np.testing.assert_allclose(window.coeffs, expected, rtol=1e-12)

    def test_laurent_polynomial(self):
        """Test that a Laurent polynomial returns its own coefficients"""
        window = fourier_coefficients(create_even_symbol(), -3, 3)

        np.testing.assert_allclose(window.coeffs, [0, 0, 0.5, 2, 0.5, 0, 0], atol=1e-12)

    def test_matches_fft(self):
        """Test exact coefficients against an FFT of samples"""
        g = make_symbol({"gain": 1.5, "power": 1, "zeros": [0.3, 4.0], "poles": [0.5, [0, 2]]})
        samples = 512
        t = np.exp(2j * np.pi * np.arange(samples) / samples)
        fft = np.fft.fft(g(t)) / samples

        window = fourier_coefficients(g, -10, 10)
        expected = np.concatenate([fft[-10:], fft[:11]])
        np.testing.assert_allclose(window.coeffs, expected, atol=1e-12)

    def test_decay_ratio(self):
        """Test the decay ratio of the coefficients"""
        g = make_symbol({"poles": [0.5, 4.0]})

        assert g.decay_ratio == pytest.approx(0.5)
        assert create_monomial(3).decay_ratio == 0.0

    def test_empty_range(self):
        """Test that an empty range is an error"""
        with pytest.raises(ValueError):
            fourier_coefficients(create_monomial(1), 2, 1)

    def test_cluster_tolerance_takes_effect(self):
        """Test that changing the cluster tolerance changes cached coefficients"""
        p, q = 0.5, 0.52
        g = RationalSymbol.build(1.0, 0, [], [p, q])
        exact = [0.0] + [(p ** (n - 1) - q ** (n - 1)) / (p - q) for n in range(2, 13)]

        separate = fourier_coefficients(g, -12, -1).coeffs
        previous = set_tolerances(Tolerances(cluster=0.1))
        try:
            merged = fourier_coefficients(g, -12, -1).coeffs
        finally:
            set_tolerances(previous)
        restored = fourier_coefficients(g, -12, -1).coeffs

        center = (p + q) / 2
        doubled = fourier_coefficients(RationalSymbol.build(1.0, 0, [], [center, center]), -12, -1)
        np.testing.assert_allclose(separate[::-1], exact, atol=1e-12)
        np.testing.assert_allclose(merged, doubled.coeffs, atol=1e-12)
        assert np.max(np.abs(merged - separate)) > 1e-6
        np.testing.assert_array_equal(restored, separate)


class TestCoeffWindow:
    """Tests for CoeffWindow"""

    def test_restrict_pads_with_zeros(self):
        """Test moving a window to another index range"""
        window = CoeffWindow(0, 2, [1, 2, 3])
        moved = window.restrict(-1, 4)

        np.testing.assert_array_equal(moved.coeffs, [0, 1, 2, 3, 0, 0])
        assert moved.coefficient(1) == 2
        assert moved.coefficient(10) == 0

    def test_interior(self):
        """Test the inner half of a window"""
        window = CoeffWindow(-4, 3, np.arange(8))
        inner = window.interior()

        assert (inner.lo, inner.hi) == (-2, 1)
        np.testing.assert_array_equal(inner.coeffs, [2, 3, 4, 5])

    def test_combine(self):
        """Test linear combinations on the union of ranges"""
        first = CoeffWindow(0, 1, [1, 1])
        second = CoeffWindow(1, 2, [1, 1])

        combined = first.combine(second, -1.0)

        assert (combined.lo, combined.hi) == (0, 2)
        np.testing.assert_array_equal(combined.coeffs, [1, 0, -1])

    def test_shape_checked(self):
        """Test that the coefficient count must fit the range"""
        with pytest.raises(ValueError):
            CoeffWindow(0, 3, [1, 2])
