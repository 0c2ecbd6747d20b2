"""Tests for the Legendre expansion of r12 powers."""

from fractions import Fraction

import pytest

from helion.numerics import PrecisionConfig
from helion.partialwave import legendre_coefficients, r12_legendre_coeff


@pytest.fixture
def cfg():
    """Default 30-digit config."""
    return PrecisionConfig()


class TestLegendreCoefficients:
    """Tests for legendre_coefficients()."""

    def test_constant_should_live_in_l_zero(self):
        """Test that r12^0 has a single unit coefficient at l=0."""
        assert legendre_coefficients(0, 0) == (Fraction(1),)
        assert legendre_coefficients(0, 1) == ()

    def test_even_power_should_terminate_above_half_power(self):
        """Test that r12^4 has no channels beyond l=2."""
        assert legendre_coefficients(4, 2)
        assert legendre_coefficients(4, 3) == ()

    def test_coulomb_kernel_should_be_single_term(self):
        """Test that 1/r12 gives 1/r> (r</r>)^l with unit coefficient."""
        for l in range(6):
            assert legendre_coefficients(-1, l) == (Fraction(1),)

    def test_linear_power_should_match_textbook_series(self):
        """Test that r12 gives (r</r>)^l [(r</r>)^2/(2l+3) - 1/(2l-1)] r>."""
        for l in range(5):
            assert legendre_coefficients(1, l) == (Fraction(-1, 2 * l - 1), Fraction(1, 2 * l + 3))

    def test_invalid_arguments_should_raise(self):
        """Test that c < -1 and l < 0 raise ValueError."""
        with pytest.raises(ValueError):
            legendre_coefficients(-2, 0)
        with pytest.raises(ValueError):
            legendre_coefficients(2, -1)


class TestR12LegendreCoeff:
    """Tests for r12_legendre_coeff()."""

    def test_constant_should_give_one_then_zero(self, cfg):
        """Test that (c=0, l=0) is 1 and (c=0, l=1) is 0."""
        assert r12_legendre_coeff(0, 0, 0.3, 2.5, cfg) == 1
        assert r12_legendre_coeff(0, 1, 0.3, 2.5, cfg) == 0

    def test_square_should_give_minus_two_at_unit_radii(self, cfg):
        """Test that (c=2, l=1, r1=r2=1) is -2."""
        assert abs(r12_legendre_coeff(2, 1, 1, 1, cfg) + 2) < 1e-25

    def test_linear_should_give_four_thirds_at_unit_radii(self, cfg):
        """Test that (c=1, l=0, r1=r2=1) is 4/3."""
        assert abs(r12_legendre_coeff(1, 0, 1, 1, cfg) - cfg.mpf(4) / 3) < 1e-25

    @pytest.mark.parametrize("c", [0, 2, 4, 6])
    @pytest.mark.parametrize("l", [0, 1, 2, 3])
    def test_closed_form_should_match_quadrature_for_even_powers(self, cfg, c, l):
        """Test that the terminating series agrees with Gauss-Legendre for polynomial kernels."""
        closed = r12_legendre_coeff(c, l, "0.7", "1.3", cfg)
        quad = r12_legendre_coeff(c, l, "0.7", "1.3", cfg, method="quadrature")
        assert abs(closed - quad) < 1e-22

    @pytest.mark.parametrize("c, l", [(-1, 0), (1, 2), (3, 1), (2, 0)])
    def test_should_be_symmetric_in_radii(self, cfg, c, l):
        """Test that g_l(r1, r2) = g_l(r2, r1)."""
        assert abs(r12_legendre_coeff(c, l, "0.4", "2.2", cfg) - r12_legendre_coeff(c, l, "2.2", "0.4", cfg)) < 1e-25

    def test_odd_power_should_approach_quadrature_with_order(self, cfg):
        """Test that a high-order quadrature converges to the closed form for r12^1."""
        closed = r12_legendre_coeff(1, 1, "0.5", "1.5", cfg)
        quad = r12_legendre_coeff(1, 1, "0.5", "1.5", cfg, method="quadrature", order=80)
        assert abs(closed - quad) < 1e-10

    def test_unknown_method_should_raise(self, cfg):
        """Test that an unknown method raises ValueError."""
        with pytest.raises(ValueError, match="method"):
            r12_legendre_coeff(0, 0, 1, 1, cfg, method="series")
