"""Tests for closed-form radial integrals and matrix assembly."""

import pytest

from helion.errors import DivergentIntegral
from helion.hylleraas import BasisSpec, IntegralTable, assemble_matrices, assemble_overlap, pair_element, radial_integral
from helion.numerics import PrecisionConfig


@pytest.fixture
def cfg():
    """Default 30-digit config."""
    return PrecisionConfig()


def _single_term(alpha):
    return BasisSpec(Z=2, omega=0, spin_symmetry="singlet", alpha=alpha, beta=alpha)


class TestRadialIntegral:
    """Tests for radial_integral()."""

    def test_lowest_integral_should_be_one_eighth(self, cfg):
        """Test that G(0,0,0;2,2) = 1/8."""
        assert abs(radial_integral(0, 0, 0, 2, 2, cfg) - cfg.mpf(1) / 8) < 1e-25

    def test_should_be_symmetric_under_electron_swap(self, cfg):
        """Test that G(a,b,c;A,B) = G(b,a,c;B,A)."""
        left = radial_integral(1, 2, 3, "1.1", "0.7", cfg)
        right = radial_integral(2, 1, 3, "0.7", "1.1", cfg)
        assert abs(left - right) < 1e-25 * abs(left)

    @pytest.mark.parametrize("alpha, beta", [(0.3, 0.3), (2.0, 0.5), (4.0, 1.0)])
    def test_inverse_r12_should_be_finite_and_positive(self, cfg, alpha, beta):
        """Test that c = -1 gives a finite positive value."""
        value = radial_integral(0, 0, -1, alpha, beta, cfg)
        assert cfg.ctx.isfinite(value) and value > 0

    def test_inverse_r12_should_match_direct_formula(self, cfg):
        """Test that G(0,0,-1;A,A) matches the closed form 5/(2 A^5)."""
        A = cfg.mpf(3)
        assert abs(radial_integral(0, 0, -1, A, A, cfg) - 5 / (2 * A ** 5)) < 1e-25

    @pytest.mark.parametrize("powers", [(0, 0, -2), (-2, 0, 0), (0, -2, 1)])
    def test_powers_below_minus_one_should_raise(self, cfg, powers):
        """Test that a, b or c below -1 raises DivergentIntegral."""
        with pytest.raises(DivergentIntegral):
            radial_integral(*powers, 1, 1, cfg)

    def test_non_positive_exponent_should_raise(self, cfg):
        """Test that vanishing exponents raise DivergentIntegral."""
        with pytest.raises(DivergentIntegral):
            radial_integral(0, 0, 0, 0, 1, cfg)

    def test_table_should_memoize(self, cfg):
        """Test that IntegralTable caches repeated lookups."""
        table = IntegralTable(cfg)
        A = cfg.mpf(2)
        first = table(1, 1, 0, A, A)
        assert table(1, 1, 0, A, A) == first
        assert table.size == 1


class TestAssembly:
    """Tests for assemble_matrices() and friends."""

    def test_single_term_should_give_screening_energy(self, cfg):
        """Test that the one-term basis at alpha=2 gives -2.75."""
        H, S = assemble_matrices(_single_term(2), cfg)
        assert abs(H[0, 0] / S[0, 0] + cfg.mpf("2.75")) < 1e-25

    def test_single_term_at_optimum_should_give_variational_minimum(self, cfg):
        """Test that alpha = 27/16 gives -(27/16)^2."""
        H, S = assemble_matrices(_single_term(cfg.mpf(27) / 16), cfg)
        assert abs(H[0, 0] / S[0, 0] + (cfg.mpf(27) / 16) ** 2) < 1e-25

    @pytest.mark.parametrize("spin, alpha, beta", [("singlet", 1.8, 1.2), ("triplet", 2.0, 0.5)])
    def test_matrices_should_be_symmetric(self, cfg, spin, alpha, beta):
        """Test that H and S are exactly symmetric."""
        H, S = assemble_matrices(BasisSpec(Z=2, omega=3, spin_symmetry=spin, alpha=alpha, beta=beta), cfg)
        for i in range(H.dimension):
            for j in range(H.dimension):
                assert H[i, j] == H[j, i]
                assert S[i, j] == S[j, i]

    @pytest.mark.parametrize("spin", ["singlet", "triplet"])
    def test_pair_element_should_match_assembled_hamiltonian(self, cfg, spin):
        """Test that the four-combination element equals the folded matrix element."""
        basis = BasisSpec(Z=2, omega=3, spin_symmetry=spin, alpha=1.9, beta=0.8)
        H, _ = assemble_matrices(basis, cfg)
        for i, j in [(0, 1), (1, 3), (2, 2), (0, basis.size - 1)]:
            element = pair_element(basis, i, j, cfg)
            assert abs(element - pair_element(basis, j, i, cfg)) < 1e-22 * max(1, abs(element))
            assert abs(element - H[i, j]) < 1e-22 * max(1, abs(element))

    def test_overlap_alone_should_match_full_assembly(self, cfg):
        """Test that assemble_overlap() agrees with the overlap from assemble_matrices()."""
        basis = BasisSpec(Z=2, omega=2, spin_symmetry="singlet", alpha=1.7, beta=1.3)
        _, S = assemble_matrices(basis, cfg)
        S_only = assemble_overlap(basis, cfg)
        for i in range(basis.size):
            for j in range(basis.size):
                assert abs(S[i, j] - S_only[i, j]) < 1e-25 * abs(S[i, i])

    def test_overlap_should_be_positive_definite(self, cfg):
        """Test that the overlap Cholesky factorization succeeds."""
        _, S = assemble_matrices(BasisSpec(Z=2, omega=4, spin_symmetry="singlet", alpha=1.8, beta=1.8), cfg)
        cfg.ctx.cholesky(S.entries)
