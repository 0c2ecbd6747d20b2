"""Configurable-precision arithmetic and eigen-solvers for helion."""

from .eigen import (
    generalized_eigenvalues,
    pair_singular_values,
    solve_antisymmetric_pairs,
    solve_generalized_symmetric,
    solve_symmetric,
    symmetric_eigenpairs,
)
from .matrices import AntisymMatrix, SymMatrix
from .precision import PrecisionConfig

__all__ = [
    "AntisymMatrix",
    "PrecisionConfig",
    "SymMatrix",
    "generalized_eigenvalues",
    "pair_singular_values",
    "solve_antisymmetric_pairs",
    "solve_generalized_symmetric",
    "solve_symmetric",
    "symmetric_eigenpairs",
]
