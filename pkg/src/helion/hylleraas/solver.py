"""Variational solve for a single S state and the quantities derived from it."""

from __future__ import annotations

import dataclasses
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from ..errors import ZeroNorm
from ..numerics import PrecisionConfig, SymMatrix, solve_generalized_symmetric
from .basis import BasisSpec
from .integrals import assemble_overlap, assemble_parts

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateSolution:
    """A solved bound state; Psi = norm_constant * sum_i coefficients[i] * phi_i."""
    basis: BasisSpec
    root_index: int
    energy: Any
    coefficients: tuple
    norm_constant: Any
    cfg: PrecisionConfig = field(default_factory=PrecisionConfig, repr=False)
    overlap: Optional[SymMatrix] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(self.coefficients) != self.basis.size:
            raise ValueError(f"Expected {self.basis.size} coefficients, got {len(self.coefficients)}")
        if self.root_index < 1: raise ValueError(f"root_index must be positive, got {self.root_index}")

    @property
    def normalized_coefficients(self) -> list:
        return [self.norm_constant * c for c in self.coefficients]

    @property
    def sign(self) -> int:
        return self.basis.sign

    def norm_squared(self):
        """<Psi|Psi> with the current norm constant applied."""
        S = self.overlap or assemble_overlap(self.basis, self.cfg)
        c = self.normalized_coefficients
        n = len(c)
        return self.cfg.ctx.fsum(c[i] * S[i, j] * c[j] for i in range(n) for j in range(n))


def _fix_sign(coefficients: list) -> list:
    """Largest-magnitude coefficient positive."""
    lead = max(coefficients, key=abs)
    return [-c for c in coefficients] if lead < 0 else list(coefficients)


def solve_state(basis: BasisSpec, root_index: int = 1, cfg: Optional[PrecisionConfig] = None) -> StateSolution:
    """root_index-th lowest eigenpair of the basis' Hamiltonian."""
    cfg = cfg or PrecisionConfig.for_omega(basis.omega)
    if not 1 <= root_index <= basis.size:
        raise ValueError(f"root_index must lie in [1, {basis.size}] for this basis, got {root_index}")
    start = time.perf_counter()
    parts = assemble_parts(basis, cfg)
    energy, vector = solve_generalized_symmetric(parts.hamiltonian, parts.overlap, root_index, cfg)[-1]
    logger.info(
        "Solved %s omega=%d root=%d (N=%d) E=%s in %.1fs",
        basis.spin_symmetry.value, basis.omega, root_index, basis.size, cfg.ctx.nstr(energy, 15), time.perf_counter() - start,
    )
    return StateSolution(basis, root_index, energy, tuple(_fix_sign(vector)), cfg.ctx.one, cfg, parts.overlap)


def normalize(solution: StateSolution) -> StateSolution:
    """Set norm_constant so that <Psi|Psi> = 1; coefficients are left as stored."""
    ctx = solution.cfg.ctx
    S = solution.overlap or assemble_overlap(solution.basis, solution.cfg)
    c = solution.coefficients
    n = len(c)
    raw = ctx.fsum(c[i] * S[i, j] * c[j] for i in range(n) for j in range(n))
    if not raw > 0: raise ZeroNorm(f"State norm is not positive ({ctx.nstr(raw, 5)}); cannot normalize")
    return dataclasses.replace(solution, norm_constant=1 / ctx.sqrt(raw), overlap=S)


@dataclass(frozen=True)
class Expectations:
    """<T>, <V> and their ratio for a normalized state."""
    kinetic: Any
    potential: Any

    @property
    def total(self):
        return self.kinetic + self.potential

    @property
    def virial_ratio(self):
        return self.potential / self.kinetic


def expectation_values(solution: StateSolution) -> Expectations:
    """Kinetic and potential expectation values from the same integral table as the solve."""
    state = normalize(solution)
    parts = assemble_parts(state.basis, state.cfg)
    c = state.normalized_coefficients
    ctx = state.cfg.ctx
    n = len(c)

    def quad(M):
        return ctx.fsum(c[i] * M[i, j] * c[j] for i in range(n) for j in range(n))

    return Expectations(quad(parts.kinetic), quad(parts.potential))
