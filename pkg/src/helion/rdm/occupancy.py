"""Schmidt/Slater spectra of channel projections and the occupancies they imply."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Sequence

import pandas as pd
from scipy.optimize import minimize_scalar

from ..errors import TraceOutOfRange
from ..hylleraas import StateSolution
from ..hylleraas.optimize import effective_n
from ..numerics import AntisymMatrix, PrecisionConfig, SymMatrix, solve_antisymmetric_pairs, solve_symmetric, symmetric_eigenpairs
from ..partialwave import CONVENTION, ChannelExpansion, LegendreConvention, TriangleQuadrature
from .laguerre import RadialBasis, build_radial_basis, default_scale
from .projection import project_expansion

logger = logging.getLogger(__name__)

TRACE_LIMIT = 1e-6
NEGLIGIBLE_WEIGHT = 1e-30


class SpectrumKind(Enum):
    SCHMIDT = "schmidt"
    SLATER = "slater"


@dataclass(frozen=True)
class ChannelSpectrum:
    """Schmidt values (singlet) or Slater pair magnitudes (triplet) of one channel."""
    l: int
    kind: SpectrumKind
    values: tuple

    def __post_init__(self):
        if self.kind is SpectrumKind.SLATER and any(v < 0 for v in self.values):
            raise ValueError(f"Slater pair magnitudes must be nonnegative (l={self.l})")


def channel_spectrum(l: int, B: SymMatrix | AntisymMatrix, cfg: PrecisionConfig) -> ChannelSpectrum:
    """Spectrum of a projected channel matrix, by its symmetry."""
    if isinstance(B, AntisymMatrix): return ChannelSpectrum(l, SpectrumKind.SLATER, tuple(solve_antisymmetric_pairs(B, cfg)))
    return ChannelSpectrum(l, SpectrumKind.SCHMIDT, tuple(solve_symmetric(B, cfg)))


@dataclass(frozen=True)
class Occupancy:
    n: int
    l: int
    occupancy: Any
    degeneracy: int

    @property
    def weight(self):
        return self.degeneracy * self.occupancy


@dataclass(frozen=True)
class OccupancySet:
    """Eigenvalues of the one-particle reduced density matrix, grouped by channel."""
    entries: tuple[Occupancy, ...]
    trace: Any
    cfg: PrecisionConfig = field(default_factory=PrecisionConfig, repr=False)

    @property
    def channels(self) -> list[int]:
        return sorted({e.l for e in self.entries})

    def for_channel(self, l: int) -> list[Occupancy]:
        return [e for e in self.entries if e.l == l]

    def channel_trace(self, l: int):
        return self.cfg.ctx.fsum(e.weight for e in self.for_channel(l))

    def scaled(self, factor: Any) -> "OccupancySet":
        """Every occupancy multiplied by `factor`; no renormalization."""
        factor = self.cfg.mpf(factor)
        entries = tuple(Occupancy(e.n, e.l, factor * e.occupancy, e.degeneracy) for e in self.entries)
        return OccupancySet(entries, factor * self.trace, self.cfg)

    def to_frame(self) -> pd.DataFrame:
        """One row per (n, l) with float occupancy and weighted occupancy."""
        rows = [{"l": e.l, "n": e.n, "degeneracy": e.degeneracy, "occupancy": float(e.occupancy), "weight": float(e.weight)} for e in self.entries]
        return pd.DataFrame(rows, columns=["l", "n", "degeneracy", "occupancy", "weight"])


def occupancy_set(values: Sequence[tuple[int, Any]], cfg: Optional[PrecisionConfig] = None) -> OccupancySet:
    """OccupancySet from (l, occupancy) pairs, e.g. for limiting cases."""
    cfg = cfg or PrecisionConfig()
    counters: dict[int, int] = {}
    entries = []
    for l, occ in values:
        n = counters.get(l, 0)
        counters[l] = n + 1
        entries.append(Occupancy(n, l, cfg.mpf(occ), 2 * l + 1))
    return OccupancySet(tuple(entries), cfg.ctx.fsum(e.weight for e in entries), cfg)


def occupancies(
    spectra: Sequence[ChannelSpectrum],
    norm_convention: LegendreConvention = CONVENTION,
    cfg: Optional[PrecisionConfig] = None,
    trace_limit: float = TRACE_LIMIT,
) -> OccupancySet:
    """Lambda_nl = (amplitude(l) * lambda_nl)^2 with (2l+1)-fold degeneracy; Slater pairs count twice.

    Raises TraceOutOfRange when the trace exceeds 1 + trace_limit.
    """
    cfg = cfg or PrecisionConfig()
    ctx = cfg.ctx
    entries = []
    for spectrum in sorted(spectra, key=lambda s: s.l):
        l = spectrum.l
        amplitude = norm_convention.amplitude(l, cfg)
        degeneracy = norm_convention.degeneracy(l)
        repeat = 2 if spectrum.kind is SpectrumKind.SLATER else 1
        n = 0
        for value in spectrum.values:
            occ = (amplitude * cfg.mpf(value)) ** 2
            if occ <= cfg.cleanup_tol: occ = ctx.zero
            if degeneracy * occ < NEGLIGIBLE_WEIGHT:
                n += repeat
                continue
            for _ in range(repeat):
                entries.append(Occupancy(n, l, occ, degeneracy))
                n += 1
    trace = ctx.fsum(e.weight for e in entries)
    if trace > 1 + trace_limit:
        raise TraceOutOfRange(f"Occupancy trace {ctx.nstr(trace, 12)} exceeds 1; check the channel convention and the state normalization")
    return OccupancySet(tuple(entries), trace, cfg)


@dataclass(frozen=True)
class Decomposition:
    """Spectra and occupancies of one state at fixed (l_max, la_max, scale)."""
    state: StateSolution
    radial_basis: RadialBasis
    matrices: dict = field(repr=False)
    spectra: tuple[ChannelSpectrum, ...]
    occupancies: OccupancySet

    @property
    def trace(self):
        return self.occupancies.trace

    @property
    def l_max(self) -> int:
        return max(s.l for s in self.spectra)


def state_scale(state: StateSolution) -> float:
    """Default Laguerre scale for the Rydberg member the state represents."""
    return default_scale(state.basis.Z, effective_n(state.basis.spin_symmetry, state.root_index))


def decompose(
    state: StateSolution,
    l_max: int,
    la_max: int,
    scale: Optional[Any] = None,
    quadrature: Optional[TriangleQuadrature] = None,
    tolerance: Optional[float] = None,
    check: bool = True,
) -> Decomposition:
    """State -> channel projections -> spectra -> occupancies."""
    cfg = state.cfg
    scale = scale if scale is not None else state_scale(state)
    expansion = ChannelExpansion(state, l_max)
    basis = build_radial_basis(la_max, scale, cfg)
    matrices = project_expansion(expansion, basis, quadrature=quadrature, tolerance=tolerance, check=check)
    spectra = tuple(channel_spectrum(l, matrices[l], cfg) for l in range(l_max + 1))
    occ = occupancies(spectra, CONVENTION, cfg)
    logger.info("Decomposed %s root %d: l_max=%d la_max=%d scale=%.4f trace=%s", state.basis.spin_symmetry.value, state.root_index, l_max, la_max, float(scale), cfg.ctx.nstr(occ.trace, 13))
    return Decomposition(expansion.state, basis, matrices, spectra, occ)


def tune_scale(
    state: StateSolution,
    l_max: int,
    la_max: int,
    bounds: Optional[tuple[float, float]] = None,
    xatol: float = 1e-3,
    **kwargs,
) -> tuple[float, Decomposition]:
    """Laguerre scale maximizing the trace at fixed la_max (bounded scalar search)."""
    centre = state_scale(state)
    lo, hi = bounds or (0.5 * centre, 2.0 * centre)
    if not 0 < lo < hi: raise ValueError(f"Invalid scale bounds: {(lo, hi)}")
    cache: dict[float, Decomposition] = {}

    def deficit(scale: float) -> float:
        cache[scale] = decompose(state, l_max, la_max, scale, **kwargs)
        return float(1 - cache[scale].trace)

    minimize_scalar(deficit, bounds=(lo, hi), method="bounded", options={"xatol": xatol})
    best = min(cache, key=lambda s: 1 - cache[s].trace)
    logger.info("Tuned Laguerre scale to %.5f (trace deficit %.3e)", best, float(1 - cache[best].trace))
    return best, cache[best]


def schmidt_reconstruction(B: SymMatrix | AntisymMatrix, basis: RadialBasis, r1: Any, r2: Any):
    """Rebuild f_l(r1, r2) from the decomposition of its projection B.

    Symmetric B: sum_n lambda_n u_n(r1) u_n(r2) over eigenpairs. Antisymmetric B has no
    real eigenvectors, so its expansion sum_ij B_ij chi_i(r1) chi_j(r2) is used directly.
    """
    cfg = basis.cfg
    ctx = cfg.ctx
    chi1, chi2 = basis.values(r1), basis.values(r2)
    n = basis.size
    if isinstance(B, AntisymMatrix):
        return ctx.fsum(B[i, j] * chi1[i] * chi2[j] for i in range(n) for j in range(n))
    total = ctx.zero
    for value, vector in symmetric_eigenpairs(B, cfg):
        u1 = ctx.fsum(vector[i] * chi1[i] for i in range(n))
        u2 = ctx.fsum(vector[i] * chi2[i] for i in range(n))
        total += value * u1 * u2
    return total
