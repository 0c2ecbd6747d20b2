"""Nonlinear exponent search: coarse log-grid scan, then Nelder-Mead refinement."""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from ..errors import NoConvergence, NotPositiveDefinite
from ..numerics import PrecisionConfig, generalized_eigenvalues
from .basis import BasisSpec, SpinSymmetry
from .integrals import assemble_parts
from .solver import StateSolution, solve_state

logger = logging.getLogger(__name__)

GRID_POINTS = 5


def effective_n(spin_symmetry: SpinSymmetry, root_index: int) -> int:
    """Principal number of the outer electron for a given root."""
    return root_index if spin_symmetry is SpinSymmetry.SINGLET else root_index + 1


def scan_bounds(basis: BasisSpec, root_index: int) -> tuple[tuple[float, float], tuple[float, float]]:
    """(alpha range, beta range) of the coarse scan."""
    Z = float(basis.Z)
    n_eff = effective_n(basis.spin_symmetry, root_index)
    return (0.5 * Z, 1.5 * Z), (0.5 * Z / n_eff, 2.0 * Z)


def root_energy(basis: BasisSpec, root_index: int, cfg: PrecisionConfig) -> float:
    """root_index-th eigenvalue, or +inf when S is numerically singular there."""
    parts = assemble_parts(basis, cfg)
    try:
        return float(generalized_eigenvalues(parts.hamiltonian, parts.overlap, cfg)[root_index - 1])
    except NotPositiveDefinite:
        return float("inf")


def optimize_exponents(
    basis_template: BasisSpec,
    root_index: int = 1,
    cfg: Optional[PrecisionConfig] = None,
    tie_exponents: Optional[bool] = None,
    grid_points: int = GRID_POINTS,
    xatol: float = 1e-5,
    fatol: float = 1e-12,
    max_iterations: int = 400,
    trace: Optional[list] = None,
) -> tuple[float, float, StateSolution]:
    """Locally minimize the root_index-th energy over (alpha, beta).

    `tie_exponents=True` keeps alpha = beta throughout and `False` scans the full
    (alpha, beta) grid. By default the singlet ground state is scanned along the
    diagonal and the tied optimum then seeds an untied refinement; every other
    root scans the full grid. Each accepted simplex energy is appended to `trace`
    when given.
    """
    cfg = cfg or PrecisionConfig.for_omega(basis_template.omega)
    if not 1 <= root_index <= basis_template.size:
        raise ValueError(f"root_index must lie in [1, {basis_template.size}], got {root_index}")
    if grid_points < 2: raise ValueError(f"grid_points must be at least 2, got {grid_points}")
    diagonal_seed = basis_template.spin_symmetry is SpinSymmetry.SINGLET and root_index == 1
    tied_scan = tie_exponents if tie_exponents is not None else diagonal_seed
    (a_lo, a_hi), (b_lo, b_hi) = scan_bounds(basis_template, root_index)

    def energy_at(alpha: float, beta: float) -> float:
        return root_energy(basis_template.with_exponents(alpha, beta), root_index, cfg)

    alphas = np.geomspace(a_lo, a_hi, grid_points)
    if tied_scan:
        grid = [(a, a) for a in alphas]
    else:
        grid = [(a, b) for a in alphas for b in np.geomspace(b_lo, b_hi, grid_points)]
    energies = [energy_at(a, b) for a, b in grid]
    best = int(np.argmin(energies))
    logger.info("Exponent scan over %d points: best E=%.12f at alpha=%.4f beta=%.4f", len(grid), energies[best], *grid[best])

    def record(intermediate_result):
        if trace is not None: trace.append(float(intermediate_result.fun))

    def refine(seed: tuple[float, float], tied: bool) -> tuple[float, float, float]:
        def objective(x: np.ndarray) -> float:
            alpha = float(np.exp(x[0]))
            return energy_at(alpha, alpha if tied else float(np.exp(x[1])))

        x0 = np.log([seed[0]]) if tied else np.log(seed)
        res = minimize(objective, x0, method="Nelder-Mead", callback=record, options={"xatol": xatol, "fatol": fatol, "maxiter": max_iterations})
        if not res.success: raise NoConvergence(f"Exponent simplex did not converge: {res.message}")
        alpha = float(np.exp(res.x[0]))
        beta = alpha if tied else float(np.exp(res.x[1]))
        logger.info("Refined %s exponents alpha=%.8f beta=%.8f E=%.12f after %d evaluations", "tied" if tied else "free", alpha, beta, res.fun, res.nfev)
        return alpha, beta, float(res.fun)

    alpha, beta, energy = refine(grid[best], tied_scan)
    if energies[best] < energy: (alpha, beta), energy = grid[best], energies[best]
    if tie_exponents is None and tied_scan:
        free_alpha, free_beta, free_energy = refine((alpha, beta), tied=False)
        if free_energy < energy: alpha, beta, energy = free_alpha, free_beta, free_energy
    solution = solve_state(basis_template.with_exponents(alpha, beta), root_index, cfg)
    return alpha, beta, solution
