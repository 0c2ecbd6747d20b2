"""Hylleraas bases, Hamiltonian assembly and variational solves for helium-like S states."""

from .basis import BasisSpec, HylleraasTerm, SpinSymmetry, enumerate_terms, term_count
from .integrals import IntegralTable, assemble_matrices, assemble_overlap, assemble_parts, pair_element, radial_integral
from .optimize import optimize_exponents
from .solver import Expectations, StateSolution, expectation_values, normalize, solve_state
from .states import REFERENCE_VALUES, ReferenceValues, StateLabel

__all__ = [
    "BasisSpec",
    "Expectations",
    "HylleraasTerm",
    "IntegralTable",
    "REFERENCE_VALUES",
    "ReferenceValues",
    "SpinSymmetry",
    "StateLabel",
    "StateSolution",
    "assemble_matrices",
    "assemble_overlap",
    "assemble_parts",
    "enumerate_terms",
    "expectation_values",
    "normalize",
    "optimize_exponents",
    "pair_element",
    "radial_integral",
    "solve_state",
    "term_count",
]
