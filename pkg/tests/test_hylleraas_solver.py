"""Tests for variational solves, normalization and exponent optimization."""

import dataclasses

import pytest

from helion.errors import ZeroNorm
from helion.hylleraas import BasisSpec, expectation_values, normalize, optimize_exponents, solve_state
from helion.numerics import PrecisionConfig


@pytest.fixture
def cfg():
    """Default 30-digit config."""
    return PrecisionConfig()


@pytest.fixture
def ground(cfg):
    """Small singlet ground-state solve."""
    return solve_state(BasisSpec(Z=2, omega=3, spin_symmetry="singlet", alpha=1.8, beta=1.8), 1, cfg)


class TestSolveState:
    """Tests for solve_state()."""

    def test_single_term_should_give_screening_energy(self, cfg):
        """Test that the one-term basis at alpha=2 gives -2.75."""
        basis = BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=2, beta=2)
        assert abs(solve_state(basis, 1, cfg).energy + cfg.mpf("2.75")) < 1e-25

    def test_energy_should_decrease_with_omega(self, cfg):
        """Test that enlarging the basis never raises the ground-state energy."""
        energies = [solve_state(BasisSpec(Z=2, omega=w, spin_symmetry="singlet", alpha=1.8, beta=1.8), 1, cfg).energy for w in range(4)]
        assert all(b <= a + 1e-25 for a, b in zip(energies, energies[1:]))
        assert energies[-1] > -2.9037243771

    def test_triplet_should_stay_above_exact_energy(self, cfg):
        """Test that a small triplet basis is variationally bounded."""
        solution = solve_state(BasisSpec(Z=2, omega=4, spin_symmetry="triplet", alpha=2.0, beta=0.5), 1, cfg)
        assert -2.1752293783 < solution.energy < -2.05

    def test_excited_root_should_lie_above_ground(self, cfg):
        """Test that root 2 lies above root 1 of the same basis."""
        basis = BasisSpec(Z=2, omega=3, spin_symmetry="singlet", alpha=2.0, beta=0.6)
        assert solve_state(basis, 2, cfg).energy > solve_state(basis, 1, cfg).energy

    def test_root_out_of_range_should_raise(self, cfg):
        """Test that root_index beyond the basis size raises ValueError."""
        basis = BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=2, beta=2)
        with pytest.raises(ValueError, match="root_index"):
            solve_state(basis, 2, cfg)

    def test_leading_coefficient_should_be_positive(self, ground):
        """Test that the largest-magnitude coefficient is positive."""
        assert max(ground.coefficients, key=abs) > 0

    def test_solution_should_be_normalized(self, ground):
        """Test that solve_state returns a unit-norm state."""
        assert abs(ground.norm_squared() - 1) < 1e-20


class TestNormalize:
    """Tests for normalize()."""

    def test_should_be_idempotent(self, ground):
        """Test that normalizing a normalized state changes nothing."""
        again = normalize(normalize(ground))
        for a, b in zip(again.normalized_coefficients, ground.normalized_coefficients):
            assert abs(a - b) < 1e-14

    def test_scaled_coefficients_should_normalize_to_same_state(self, ground):
        """Test that multiplying all coefficients by 7 gives the same normalized state."""
        scaled = dataclasses.replace(ground, coefficients=tuple(7 * c for c in ground.coefficients))
        for a, b in zip(normalize(scaled).normalized_coefficients, normalize(ground).normalized_coefficients):
            assert abs(a - b) < 1e-20

    def test_zero_state_should_raise(self, ground):
        """Test that a vanishing coefficient vector raises ZeroNorm."""
        zero = dataclasses.replace(ground, coefficients=tuple(0 * c for c in ground.coefficients))
        with pytest.raises(ZeroNorm):
            normalize(zero)


class TestExpectations:
    """Tests for expectation_values()."""

    def test_should_add_up_to_energy(self, ground):
        """Test that <T> + <V> equals the eigenvalue."""
        assert abs(expectation_values(ground).total - ground.energy) < 1e-20

    def test_optimal_single_term_should_satisfy_virial_theorem(self, cfg):
        """Test that <V>/<T> = -2 at alpha = 27/16."""
        alpha = cfg.mpf(27) / 16
        solution = solve_state(BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=alpha, beta=alpha), 1, cfg)
        assert abs(expectation_values(solution).virial_ratio + 2) < 1e-20


class TestOptimizeExponents:
    """Tests for optimize_exponents()."""

    def test_single_term_should_find_analytic_minimum(self, cfg):
        """Test that the tied one-term search lands on alpha = 27/16."""
        template = BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=2, beta=2)
        alpha, beta, solution = optimize_exponents(template, 1, cfg, tie_exponents=True)
        assert alpha == beta
        assert alpha == pytest.approx(27 / 16, abs=1e-3)
        assert float(solution.energy) == pytest.approx(-(27 / 16) ** 2, abs=1e-8)

    def test_default_search_should_untie_ground_state(self, cfg):
        """Test that the default singlet search leaves the diagonal and beats the tied optimum."""
        template = BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=2, beta=2)
        alpha, beta, solution = optimize_exponents(template, 1, cfg)
        assert alpha != pytest.approx(beta, abs=0.1)
        assert float(solution.energy) < -2.87

    def test_default_search_should_not_lose_to_tied_search(self, cfg):
        """Test that the free refinement never ends above the tied optimum."""
        template = BasisSpec(Z=2, omega=1, spin_symmetry="singlet", alpha=2, beta=2)
        _, _, tied = optimize_exponents(template, 1, cfg, tie_exponents=True)
        _, _, free = optimize_exponents(template, 1, cfg)
        assert free.energy <= tied.energy + 1e-20

    def test_trace_should_never_increase(self, cfg):
        """Test that accepted simplex energies are non-increasing."""
        template = BasisSpec(Z=2, omega=1, spin_symmetry="singlet", alpha=2, beta=2)
        trace = []
        optimize_exponents(template, 1, cfg, trace=trace)
        assert trace
        assert all(b <= a + 1e-12 for a, b in zip(trace, trace[1:]))

    def test_should_not_be_worse_than_starting_guess(self, cfg):
        """Test that the optimized energy beats the hydrogenic starting exponents."""
        template = BasisSpec(Z=2, omega=2, spin_symmetry="triplet", alpha=2.0, beta=1.0)
        start = solve_state(template, 1, cfg).energy
        _, _, solution = optimize_exponents(template, 1, cfg, grid_points=3)
        assert solution.energy <= start

    def test_optimized_state_should_satisfy_virial_theorem(self, cfg):
        """Test that optimized exponents give <V>/<T> = -2 for a small basis."""
        template = BasisSpec(Z=2, omega=1, spin_symmetry="singlet", alpha=2, beta=2)
        _, _, solution = optimize_exponents(template, 1, cfg)
        assert float(expectation_values(solution).virial_ratio) == pytest.approx(-2.0, abs=1e-3)

    def test_invalid_grid_should_raise(self, cfg):
        """Test that fewer than two grid points raise ValueError."""
        template = BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=2, beta=2)
        with pytest.raises(ValueError, match="grid_points"):
            optimize_exponents(template, 1, cfg, grid_points=1)


@pytest.mark.slow
class TestPublishedEnergies:
    """Optimized energies against published Hylleraas results."""

    @pytest.mark.parametrize(
        "omega, expected", [(5, -2.9037212928), (6, -2.9037237676), (7, -2.9037241789), (8, -2.9037243146)]
    )
    def test_ground_state_should_reach_published_energy(self, omega, expected):
        """Test that the optimized singlet ground state reaches the published energy."""
        template = BasisSpec(Z=2, omega=omega, spin_symmetry="singlet", alpha=2, beta=2)
        _, _, solution = optimize_exponents(template, 1, PrecisionConfig.for_omega(omega))
        assert float(solution.energy) <= expected + 1e-9

    def test_triplet_should_reach_published_energy(self):
        """Test that the 1s2s triplet at omega=10 reaches -2.17522937531."""
        template = BasisSpec(Z=2, omega=10, spin_symmetry="triplet", alpha=2, beta=1)
        _, _, solution = optimize_exponents(template, 1, PrecisionConfig.for_omega(10))
        assert float(solution.energy) == pytest.approx(-2.17522937531, abs=1e-9)

    def test_energy_should_not_rise_from_omega_five_to_ten(self):
        """Test that nested bases at fixed exponents give non-increasing energies."""
        cfg = PrecisionConfig.for_omega(10)
        energies = [solve_state(BasisSpec(Z=2, omega=w, spin_symmetry="singlet", alpha=1.8, beta=1.8), 1, cfg).energy for w in range(5, 11)]
        assert all(b <= a + 1e-20 for a, b in zip(energies, energies[1:]))
        assert float(energies[-1]) > -2.9037243771
