"""Projection of channel functions onto a product Laguerre basis."""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from ..errors import QuadratureNotConverged
from ..numerics import AntisymMatrix, PrecisionConfig, SymMatrix
from ..partialwave import ChannelExpansion, PartialWaveChannel, TriangleQuadrature
from .laguerre import RadialBasis

logger = logging.getLogger(__name__)

MAX_REFINEMENTS = 2


def projection_quadrature(expansion_omega: int, l_max: int, basis: RadialBasis, alpha, beta) -> TriangleQuadrature:
    """Default rule for <chi_i(r1)| f_l |chi_j(r2)>."""
    cfg = basis.cfg
    kappa = cfg.mpf(basis.scale) / 2 + min(cfg.mpf(alpha), cfg.mpf(beta))
    radial = basis.size + expansion_omega + l_max // 2 + 32
    angular = (basis.size + expansion_omega + l_max) // 2 + 24
    return TriangleQuadrature(radial, angular, kappa, cfg)


def _half_projections(channel_values, channels: Sequence[int], basis: RadialBasis, quadrature: TriangleQuadrature) -> dict[int, list[list]]:
    """G_l[i][j] = int_{r1 <= r2} chi_i(r1) f_l(r1, r2) chi_j(r2) for each requested l."""
    ctx = basis.cfg.ctx
    size = basis.size
    G = {l: [[ctx.zero] * size for _ in range(size)] for l in channels}
    top = max(channels)
    for r2, wb in quadrature.outer:
        inner = {l: [ctx.zero] * size for l in channels}
        for t, wa in quadrature.inner:
            r1 = t * r2
            w = wb * r2 * wa
            values = channel_values(r1, r2, top)
            chi = basis.values(r1)
            for l in channels:
                wf = w * values[l]
                row = inner[l]
                for i in range(size):
                    row[i] += wf * chi[i]
        chi2 = basis.values(r2)
        for l in channels:
            row, Gl = inner[l], G[l]
            for i in range(size):
                for j in range(size):
                    Gl[i][j] += row[i] * chi2[j]
    return G


def _reflect(G: list[list], sign: int, cfg: PrecisionConfig) -> SymMatrix | AntisymMatrix:
    """B = G + s G^T, assembled from the upper triangle."""
    n = len(G)
    if sign > 0: return SymMatrix.from_upper(cfg, n, lambda i, j: G[i][j] + G[j][i])
    return AntisymMatrix.from_upper(cfg, n, lambda i, j: G[i][j] - G[j][i])


def _max_abs(G: list[list], sign: int):
    n = len(G)
    return max(abs(G[i][j] + sign * G[j][i]) for i in range(n) for j in range(n))


def _converged_rule(expansion: ChannelExpansion, basis: RadialBasis, quadrature: TriangleQuadrature, tolerance, check_l: int):
    """Double the rule until channel `check_l` is stable; returns (rule, G for check_l)."""
    sign = expansion.sign
    base = _half_projections(expansion.values, [check_l], basis, quadrature)[check_l]
    for attempt in range(MAX_REFINEMENTS + 1):
        finer_rule = quadrature.refined()
        finer = _half_projections(expansion.values, [check_l], basis, finer_rule)[check_l]
        n = basis.size
        change = max(abs((finer[i][j] + sign * finer[j][i]) - (base[i][j] + sign * base[j][i])) for i in range(n) for j in range(n))
        scale = max(_max_abs(finer, sign), basis.cfg.ctx.eps)
        logger.debug("Projection check l=%d nodes=%dx%d: relative change %s", check_l, quadrature.radial_nodes, quadrature.angular_nodes, basis.cfg.ctx.nstr(change / scale, 3))
        if change <= tolerance * scale: return quadrature, base
        if attempt == MAX_REFINEMENTS: break
        quadrature, base = finer_rule, finer
    raise QuadratureNotConverged(
        f"Doubling {quadrature.radial_nodes}x{quadrature.angular_nodes} nodes changed the l={check_l} projection "
        f"by {basis.cfg.ctx.nstr(change / scale, 3)} relative (tolerance {tolerance:g})"
    )


def project_expansion(
    expansion: ChannelExpansion,
    basis: RadialBasis,
    channels: Optional[Sequence[int]] = None,
    quadrature: Optional[TriangleQuadrature] = None,
    tolerance: Optional[float] = None,
    check: bool = True,
) -> dict[int, SymMatrix | AntisymMatrix]:
    """B_l = <chi_i(r1)| f_l(r1, r2) |chi_j(r2)> for several channels from one pass over the nodes.

    With `check`, the rule is doubled on the first channel until entries move by at most
    `tolerance` relative to max|B| (default: the configured eigen-residual tolerance).
    """
    cfg = basis.cfg
    if cfg.working_digits != expansion.cfg.working_digits:
        raise ValueError(f"Basis precision ({cfg.working_digits}) differs from the state's ({expansion.cfg.working_digits})")
    channels = list(range(expansion.l_max + 1)) if channels is None else list(channels)
    state = expansion.state
    quadrature = quadrature or projection_quadrature(state.basis.omega, expansion.l_max, basis, state.basis.alpha, state.basis.beta)
    tolerance = tolerance if tolerance is not None else cfg.eig_residual_tol
    if check:
        quadrature, _ = _converged_rule(expansion, basis, quadrature, tolerance, channels[0])
    G = _half_projections(expansion.values, channels, basis, quadrature)
    logger.info("Projected %d channels onto %d Laguerre functions with %dx%d nodes", len(channels), basis.size, quadrature.radial_nodes, quadrature.angular_nodes)
    return {l: _reflect(G[l], expansion.sign, cfg) for l in channels}


def project_channel(
    channel: PartialWaveChannel,
    basis: RadialBasis,
    quadrature: Optional[TriangleQuadrature] = None,
    tolerance: Optional[float] = None,
    check: bool = True,
) -> SymMatrix | AntisymMatrix:
    """Symmetric (singlet) or antisymmetric (triplet) projection of one channel."""
    expansion = channel.expansion or ChannelExpansion(channel.state_ref, channel.l)
    return project_expansion(expansion, basis, [channel.l], quadrature, tolerance, check)[channel.l]
