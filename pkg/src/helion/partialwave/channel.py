"""Legendre channel functions f_l(r1, r2) of a solved state and their norms."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from ..hylleraas import StateSolution, normalize
from ..numerics import PrecisionConfig
from .legendre import legendre_coefficients
from .quadrature import TriangleQuadrature

logger = logging.getLogger(__name__)

DEFAULT_L_MAX = 40


@dataclass(frozen=True)
class LegendreConvention:
    """Constants tying channel functions to occupancies.

    With Psi = sum_l f_l / (r1 r2) P_l(cos theta) and <Psi|Psi> = 1:
    the squared norm carried by channel l is (4 pi)^2 / (2l+1) * int int f_l^2, and a
    Schmidt value lambda of f_l becomes the (2l+1)-fold occupancy (4 pi lambda / (2l+1))^2.
    """

    def amplitude(self, l: int, cfg: PrecisionConfig):
        return 4 * cfg.ctx.pi / (2 * l + 1)

    def channel_weight(self, l: int, cfg: PrecisionConfig):
        return (4 * cfg.ctx.pi) ** 2 / (2 * l + 1)

    def degeneracy(self, l: int) -> int:
        return 2 * l + 1


CONVENTION = LegendreConvention()


@dataclass(frozen=True)
class ExpansionPolicy:
    """Channel truncation and the Gauss-Legendre order of the quadrature cross-check."""
    l_max: int = DEFAULT_L_MAX
    gl_order: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.l_max, int) or self.l_max < 0: raise ValueError(f"l_max must be a nonnegative integer, got {self.l_max!r}")
        if self.gl_order is not None and self.gl_order < 1: raise ValueError(f"gl_order must be positive, got {self.gl_order}")

    def order_for(self, omega: int) -> int:
        """Quadrature order for a basis of the given omega; explicit orders must be large enough."""
        minimum = 2 * self.l_max + omega + 4
        if self.gl_order is None: return minimum
        if self.gl_order < minimum: raise ValueError(f"gl_order {self.gl_order} is below 2*l_max + omega + 4 = {minimum}")
        return self.gl_order


class ChannelExpansion:
    """All channels l <= l_max of one normalized state, evaluated together.

    The exponential and power sums Q_k(r1, r2) are shared between channels;
    only the r12^k Legendre factors depend on l.
    """

    def __init__(self, state: StateSolution, l_max: int):
        self.state = normalize(state)
        self.l_max = l_max
        self.cfg = self.state.cfg
        basis = self.state.basis
        ctx = self.cfg.ctx
        self.sign = basis.sign
        self.alpha, self.beta = self.cfg.mpf(basis.alpha), self.cfg.mpf(basis.beta)
        self.k_max = max((t.k for t in basis.terms), default=0)
        self.power_max = max((max(t.m, t.n) for t in basis.terms), default=0)
        self._by_k: list[list[tuple[int, int, Any]]] = [[] for _ in range(self.k_max + 1)]
        for term, c in zip(basis.terms, self.state.normalized_coefficients):
            self._by_k[term.k].append((term.m, term.n, c))
        self._coeffs = [[[ctx.mpf(f.numerator) / f.denominator for f in legendre_coefficients(k, l)] for k in range(self.k_max + 1)] for l in range(l_max + 1)]

    def radial_sums(self, r1, r2) -> list:
        """Q_k = sum C [e^(-a r1 - b r2) r1^m r2^n + s e^(-b r1 - a r2) r1^n r2^m] for each k."""
        ctx = self.cfg.ctx
        e1 = ctx.exp(-self.alpha * r1 - self.beta * r2)
        e2 = self.sign * ctx.exp(-self.beta * r1 - self.alpha * r2)
        p1, p2 = [ctx.one], [ctx.one]
        for _ in range(self.power_max):
            p1.append(p1[-1] * r1)
            p2.append(p2[-1] * r2)
        return [ctx.fsum(c * (e1 * p1[m] * p2[n] + e2 * p1[n] * p2[m]) for m, n, c in group) for group in self._by_k]

    def _channel(self, l: int, sums: list, small, big, rho_powers: list, big_powers: list):
        ctx = self.cfg.ctx
        total = ctx.zero
        for k, q in enumerate(sums):
            coeffs = self._coeffs[l][k]
            if not coeffs or not q: continue
            g = ctx.fsum(coef * rho_powers[l + 2 * i] for i, coef in enumerate(coeffs))
            total += q * big_powers[k] * g
        return total

    def _geometry(self, r1, r2, l_top: int):
        ctx = self.cfg.ctx
        small, big = (r1, r2) if r1 <= r2 else (r2, r1)
        rho = small / big if big else ctx.zero
        rho_powers = [ctx.one]
        for _ in range(l_top + 2 * self.k_max + 2):
            rho_powers.append(rho_powers[-1] * rho)
        big_powers = [ctx.one]
        for _ in range(self.k_max):
            big_powers.append(big_powers[-1] * big)
        return small, big, rho_powers, big_powers

    def value(self, l: int, r1, r2):
        """f_l(r1, r2)."""
        if not 0 <= l <= self.l_max: raise ValueError(f"Channel {l} outside 0..{self.l_max}")
        r1, r2 = self.cfg.mpf(r1), self.cfg.mpf(r2)
        if r1 == 0 or r2 == 0: return self.cfg.ctx.zero
        return r1 * r2 * self._channel(l, self.radial_sums(r1, r2), *self._geometry(r1, r2, l))

    def values(self, r1, r2, l_top: Optional[int] = None) -> list:
        """[f_0, ..., f_l_top] at one point; l_top defaults to l_max."""
        l_top = self.l_max if l_top is None else min(l_top, self.l_max)
        r1, r2 = self.cfg.mpf(r1), self.cfg.mpf(r2)
        if r1 == 0 or r2 == 0: return [self.cfg.ctx.zero] * (l_top + 1)
        sums = self.radial_sums(r1, r2)
        geometry = self._geometry(r1, r2, l_top)
        return [r1 * r2 * self._channel(l, sums, *geometry) for l in range(l_top + 1)]

    def sample(self, l: int, r: np.ndarray) -> np.ndarray:
        """f_l on the tensor grid r x r in double precision."""
        r = np.asarray(r, dtype=np.float64)
        alpha, beta = float(self.alpha), float(self.beta)
        big = np.maximum.outer(r, r)
        small = np.minimum.outer(r, r)
        rho = np.divide(small, big, out=np.zeros_like(big), where=big > 0)
        ea, eb = np.exp(-alpha * r), np.exp(-beta * r)
        out = np.zeros_like(big)
        for k, group in enumerate(self._by_k):
            coeffs = legendre_coefficients(k, l)
            if not coeffs or not group: continue
            g = sum(float(coef) * rho ** (l + 2 * i) for i, coef in enumerate(coeffs)) * big ** k
            q = np.zeros_like(big)
            for m, n, c in group:
                q += float(c) * (np.outer(ea * r ** m, eb * r ** n) + self.sign * np.outer(eb * r ** n, ea * r ** m))
            out += q * g
        return np.outer(r, r) * out


@dataclass(frozen=True)
class PartialWaveChannel:
    """One Legendre channel of a solved state; `evaluator(r1, r2)` gives f_l."""
    l: int
    state_ref: StateSolution
    evaluator: Callable[[Any, Any], Any] = field(repr=False)
    expansion: Optional[ChannelExpansion] = field(default=None, repr=False, compare=False)

    def __call__(self, r1, r2):
        return self.evaluator(r1, r2)

    @property
    def sign(self) -> int:
        return self.state_ref.basis.sign

    @property
    def cfg(self) -> PrecisionConfig:
        return self.state_ref.cfg

    def sample(self, r: np.ndarray) -> np.ndarray:
        """Double-precision samples F[a, b] = f_l(r[a], r[b])."""
        expansion = self.expansion or ChannelExpansion(self.state_ref, self.l)
        return expansion.sample(self.l, r)


def build_channel(state: StateSolution, l: int, policy: Optional[ExpansionPolicy] = None, expansion: Optional[ChannelExpansion] = None) -> PartialWaveChannel:
    """Channel l of the normalized state."""
    policy = policy or ExpansionPolicy()
    policy.order_for(state.basis.omega)
    if not 0 <= l <= policy.l_max: raise ValueError(f"Channel {l} outside 0..{policy.l_max}")
    expansion = expansion or ChannelExpansion(state, policy.l_max)
    return PartialWaveChannel(l, expansion.state, lambda r1, r2: expansion.value(l, r1, r2), expansion)


def build_channels(state: StateSolution, policy: Optional[ExpansionPolicy] = None) -> list[PartialWaveChannel]:
    """Every channel l <= policy.l_max, sharing one expansion."""
    policy = policy or ExpansionPolicy()
    expansion = ChannelExpansion(state, policy.l_max)
    return [build_channel(state, l, policy, expansion) for l in range(policy.l_max + 1)]


def norm_quadrature(state: StateSolution, l_max: int, radial_nodes: Optional[int] = None, angular_nodes: Optional[int] = None) -> TriangleQuadrature:
    """Rule for int int f_l^2, whose slowest decay along r2 is 2 * min(alpha, beta)."""
    basis = state.basis
    kappa = 2 * min(state.cfg.mpf(basis.alpha), state.cfg.mpf(basis.beta))
    return TriangleQuadrature(
        radial_nodes or 2 * basis.omega + l_max + 40,
        angular_nodes or basis.omega + l_max + 30,
        kappa,
        state.cfg,
    )


def channel_norms(state: StateSolution, policy: Optional[ExpansionPolicy] = None, quadrature: Optional[TriangleQuadrature] = None) -> list:
    """(4 pi)^2/(2l+1) int int f_l^2 for every l <= policy.l_max."""
    policy = policy or ExpansionPolicy()
    expansion = ChannelExpansion(state, policy.l_max)
    quadrature = quadrature or norm_quadrature(expansion.state, policy.l_max)
    cfg = expansion.cfg
    acc = [cfg.ctx.zero] * (policy.l_max + 1)
    for _, r1, r2, w in quadrature.points():
        for l, f in enumerate(expansion.values(r1, r2)):
            acc[l] += w * f * f
    # the half-quadrant carries half of each symmetric integrand
    norms = [2 * CONVENTION.channel_weight(l, cfg) * a for l, a in enumerate(acc)]
    logger.debug("Channel norms up to l=%d sum to %s", policy.l_max, cfg.ctx.nstr(cfg.ctx.fsum(norms), 15))
    return norms


def channel_norm(channel: PartialWaveChannel, policy: Optional[ExpansionPolicy] = None, quadrature: Optional[TriangleQuadrature] = None):
    """Share of <Psi|Psi> carried by one channel."""
    policy = policy or ExpansionPolicy(l_max=channel.l)
    cfg = channel.cfg
    quadrature = quadrature or norm_quadrature(channel.state_ref, max(policy.l_max, channel.l))
    half = quadrature.integrate(lambda r1, r2: channel(r1, r2) ** 2)
    return 2 * CONVENTION.channel_weight(channel.l, cfg) * half
