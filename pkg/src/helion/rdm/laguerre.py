"""Orthonormal one-particle Laguerre functions on [0, inf)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from ..numerics import PrecisionConfig
from ..partialwave import gauss_rule


@dataclass(frozen=True)
class RadialBasis:
    """chi_i(r) = sqrt(sigma i!/(i+2)!) x exp(-x/2) L_i^(2)(x) with x = sigma r, i < size."""
    size: int
    scale: Any
    cfg: PrecisionConfig

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1: raise ValueError(f"Basis size must be a positive integer, got {self.size!r}")
        if not self.scale > 0: raise ValueError(f"Basis scale must be positive, got {self.scale}")

    def _polynomials(self, x) -> list:
        """L_0^(2)(x), ..., L_{size-1}^(2)(x) by the three-term recurrence."""
        values = [self.cfg.ctx.one]
        if self.size > 1: values.append(3 - x)
        for i in range(1, self.size - 1):
            values.append(((2 * i + 3 - x) * values[i] - (i + 2) * values[i - 1]) / (i + 1))
        return values

    def _norms(self) -> list:
        ctx = self.cfg.ctx
        sigma = self.cfg.mpf(self.scale)
        return [ctx.sqrt(sigma / ((i + 1) * (i + 2))) for i in range(self.size)]

    def values(self, r) -> list:
        """[chi_0(r), ..., chi_{size-1}(r)]."""
        ctx = self.cfg.ctx
        x = self.cfg.mpf(self.scale) * self.cfg.mpf(r)
        envelope = x * ctx.exp(-x / 2)
        return [n * envelope * p for n, p in zip(self._norms(), self._polynomials(x))]

    def gram(self, order: Optional[int] = None):
        """Overlap matrix <chi_i|chi_j> by generalized Gauss-Laguerre quadrature (exact for order >= size)."""
        ctx = self.cfg.ctx
        X, W = gauss_rule(self.cfg.working_digits, order or self.size + 1, "glaguerre", alpha=2)
        norms = self._norms()
        sigma = self.cfg.mpf(self.scale)
        G = ctx.matrix(self.size, self.size)
        for x, w in zip(X, W):
            x, w = ctx.mpf(x), ctx.mpf(w)
            p = self._polynomials(x)
            for i in range(self.size):
                for j in range(i, self.size):
                    G[i, j] += w * p[i] * p[j]
        for i in range(self.size):
            for j in range(i, self.size):
                G[i, j] = G[j, i] = norms[i] * norms[j] * G[i, j] / sigma
        return G


def build_radial_basis(la_max: int, scale: Any, cfg: Optional[PrecisionConfig] = None) -> RadialBasis:
    """Orthonormal Laguerre family of `la_max` functions at inverse length `scale`."""
    if la_max < 1: raise ValueError(f"la_max must be at least 1, got {la_max}")
    return RadialBasis(la_max, scale, cfg or PrecisionConfig())


def default_scale(Z: Any, n: int) -> float:
    """2Z / (1 + n): compact for the ground state, diffuse for Rydberg members."""
    return 2 * float(Z) / (1 + n)
