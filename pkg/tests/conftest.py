"""Shared small states for the pipeline tests."""

import pytest

from helion.hylleraas import BasisSpec, solve_state
from helion.numerics import PrecisionConfig


@pytest.fixture(scope="session")
def cfg30():
    """Default 30-digit config shared across modules."""
    return PrecisionConfig()


@pytest.fixture(scope="session")
def small_ground(cfg30):
    """Singlet ground state in a 20-term basis (omega=3)."""
    return solve_state(BasisSpec(Z=2, omega=3, spin_symmetry="singlet", alpha=1.8, beta=1.8), 1, cfg30)


@pytest.fixture(scope="session")
def small_triplet(cfg30):
    """1s2s triplet in a small basis (omega=3)."""
    return solve_state(BasisSpec(Z=2, omega=3, spin_symmetry="triplet", alpha=2.0, beta=0.55), 1, cfg30)


@pytest.fixture(scope="session")
def product_ground(cfg30):
    """Non-interacting ground state: the product of two hydrogenic 1s orbitals."""
    return solve_state(BasisSpec(Z=2, omega=1, spin_symmetry="singlet", alpha=2, beta=2, interaction=0), 1, cfg30)


@pytest.fixture(scope="session")
def determinant_triplet(cfg30):
    """Non-interacting triplet with one term: a single Slater determinant of e^(-2r) and r e^(-r)."""
    return solve_state(BasisSpec(Z=2, omega=1, spin_symmetry="triplet", alpha=2, beta=1, interaction=0), 1, cfg30)
