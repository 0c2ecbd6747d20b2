"""Tests for Hylleraas term enumeration, basis specs and state labels."""

import pytest

from helion.hylleraas import BasisSpec, HylleraasTerm, REFERENCE_VALUES, SpinSymmetry, StateLabel, enumerate_terms, term_count


class TestEnumeration:
    """Tests for enumerate_terms() and term_count()."""

    @pytest.mark.parametrize(
        "omega, spin, expected",
        [(15, "singlet", 444), (5, "singlet", 34), (6, "triplet", 34), (0, "triplet", 0), (0, "singlet", 1), (16, "triplet", 444)],
    )
    def test_counts_should_match_published_sizes(self, omega, spin, expected):
        """Test that basis sizes match the published term counts."""
        assert len(enumerate_terms(omega, spin)) == expected

    @pytest.mark.parametrize("omega", range(0, 17))
    @pytest.mark.parametrize("spin", ["singlet", "triplet"])
    def test_closed_form_should_match_enumeration(self, omega, spin):
        """Test that term_count() agrees with the enumeration for every omega."""
        assert term_count(omega, spin) == len(enumerate_terms(omega, spin))

    def test_terms_should_be_canonical_and_sorted(self):
        """Test that terms satisfy m <= n, degree <= omega and lexicographic order."""
        terms = enumerate_terms(6, SpinSymmetry.SINGLET)
        assert terms == sorted(terms)
        assert all(t.m <= t.n and t.degree <= 6 for t in terms)

    def test_triplet_should_skip_diagonal_terms(self):
        """Test that m == n terms vanish from the triplet list."""
        assert all(t.m < t.n for t in enumerate_terms(8, "triplet"))

    def test_negative_omega_should_raise(self):
        """Test that omega < 0 raises ValueError."""
        with pytest.raises(ValueError, match="omega"):
            enumerate_terms(-1, "singlet")

    def test_negative_power_should_raise(self):
        """Test that HylleraasTerm rejects negative powers."""
        with pytest.raises(ValueError):
            HylleraasTerm(0, -1, 2)


class TestBasisSpec:
    """Tests for BasisSpec validation."""

    def test_should_fill_canonical_terms(self):
        """Test that an empty term list is replaced by the canonical enumeration."""
        basis = BasisSpec(Z=2, omega=3, spin_symmetry="triplet", alpha=2.0, beta=0.5)
        assert basis.spin_symmetry is SpinSymmetry.TRIPLET
        assert basis.terms == tuple(enumerate_terms(3, "triplet"))
        assert basis.sign == -1

    def test_non_canonical_terms_should_raise(self):
        """Test that a custom term list is rejected."""
        with pytest.raises(ValueError, match="canonical"):
            BasisSpec(Z=2, omega=1, spin_symmetry="singlet", alpha=2, beta=2, terms=(HylleraasTerm(0, 0, 0),))

    @pytest.mark.parametrize("field, value", [("Z", 0), ("alpha", -1.0), ("beta", 0.0)])
    def test_non_positive_parameters_should_raise(self, field, value):
        """Test that Z and both exponents must be positive."""
        kwargs = {"Z": 2, "omega": 1, "spin_symmetry": "singlet", "alpha": 2, "beta": 2, field: value}
        with pytest.raises(ValueError, match=field):
            BasisSpec(**kwargs)

    def test_invalid_spin_should_raise(self):
        """Test that an unknown spin symmetry raises ValueError."""
        with pytest.raises(ValueError, match="spin"):
            BasisSpec(Z=2, omega=1, spin_symmetry="quintet", alpha=2, beta=2)

    def test_with_omega_should_reenumerate(self):
        """Test that with_omega() rebuilds the term list."""
        basis = BasisSpec(Z=2, omega=2, spin_symmetry="singlet", alpha=2, beta=2).with_omega(5)
        assert basis.size == 34

    def test_with_exponents_should_keep_terms(self):
        """Test that with_exponents() only swaps the exponents."""
        basis = BasisSpec(Z=2, omega=2, spin_symmetry="singlet", alpha=2, beta=2)
        moved = basis.with_exponents(1.5, 0.5)
        assert (moved.alpha, moved.beta, moved.terms) == (1.5, 0.5, basis.terms)


class TestStateLabel:
    """Tests for StateLabel parsing and reference data."""

    @pytest.mark.parametrize(
        "label, spin, root",
        [("1s1s", "singlet", 1), ("1s2s", "singlet", 2), ("1s2s", "triplet", 1), ("1s6s", "triplet", 5)],
    )
    def test_root_index_should_follow_spin(self, label, spin, root):
        """Test that singlet n maps to root n and triplet n to root n - 1."""
        parsed = StateLabel.parse(label, spin)
        assert parsed.root_index == root
        assert StateLabel.from_root(spin, root) == parsed

    @pytest.mark.parametrize("label", ["1s0s", "2s2s", "1s10s", "1p2s", ""])
    def test_invalid_labels_should_raise(self, label):
        """Test that labels outside 1sns with 1 <= n <= 9 are rejected."""
        with pytest.raises(ValueError, match="Invalid state label"):
            StateLabel.parse(label, "singlet")

    def test_triplet_ground_state_should_raise(self):
        """Test that 1s1s has no triplet."""
        with pytest.raises(ValueError, match="triplet"):
            StateLabel.parse("1s1s", "triplet")

    def test_references_should_follow_non_interacting_limits(self):
        """Test that the ground state references 0 and excited states 0.5 and 1."""
        ground, excited = StateLabel(1, "singlet"), StateLabel(3, "triplet")
        assert (ground.reference_linear, ground.reference_von_neumann) == (0.0, 0.0)
        assert (excited.reference_linear, excited.reference_von_neumann) == (0.5, 1.0)

    def test_default_omega_should_depend_on_spin(self):
        """Test that singlets default to omega 15 and triplets to 16."""
        assert StateLabel(2, "singlet").default_omega == 15
        assert StateLabel(2, "triplet").default_omega == 16

    def test_reference_values_should_cover_figure_states(self):
        """Test that reference data exists for singlet n=1..6 and triplet n=2..6."""
        assert len(REFERENCE_VALUES) == 11
        assert REFERENCE_VALUES[StateLabel(1, "singlet")].energy == pytest.approx(-2.90372437)
