"""Product rule over the half-quadrant 0 <= r1 <= r2.

The outer radius r2 uses Gauss-Laguerre nodes scaled by `kappa`; the inner radius is
r1 = t * r2 with Gauss-Legendre nodes t in (0, 1). Channel functions with odd r12
powers have a kink on r1 = r2, which is an edge of this region, so both rules see a
smooth integrand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Callable

from ..numerics import PrecisionConfig


@lru_cache(maxsize=None)
def gauss_rule(digits: int, order: int, qtype: str, alpha: int = 0):
    """Nodes and weights of an mpmath Gauss rule, cached per precision."""
    ctx = PrecisionConfig(working_digits=digits).ctx
    X, W = ctx.gauss_quadrature(order, qtype, alpha=alpha)
    return [X[i] for i in range(order)], [W[i] for i in range(order)]


@dataclass(frozen=True)
class TriangleQuadrature:
    radial_nodes: int
    angular_nodes: int
    kappa: Any
    cfg: PrecisionConfig

    def __post_init__(self):
        if self.radial_nodes < 2 or self.angular_nodes < 2:
            raise ValueError(f"Need at least 2 nodes per direction, got {self.radial_nodes} x {self.angular_nodes}")
        if not self.kappa > 0: raise ValueError(f"kappa must be positive, got {self.kappa}")

    @cached_property
    def outer(self) -> list[tuple[Any, Any]]:
        """(r2, weight) with the Laguerre weight folded in: int dr2 h = sum w h(r2)."""
        ctx = self.cfg.ctx
        kappa = self.cfg.mpf(self.kappa)
        X, W = gauss_rule(self.cfg.working_digits, self.radial_nodes, "laguerre")
        return [(ctx.mpf(x) / kappa, ctx.mpf(w) * ctx.exp(ctx.mpf(x)) / kappa) for x, w in zip(X, W)]

    @cached_property
    def inner(self) -> list[tuple[Any, Any]]:
        """(t, weight) on (0, 1)."""
        ctx = self.cfg.ctx
        X, W = gauss_rule(self.cfg.working_digits, self.angular_nodes, "legendre01")
        return [(ctx.mpf(x), ctx.mpf(w)) for x, w in zip(X, W)]

    def points(self):
        """Yield (outer index, r1, r2, weight) over the half-quadrant."""
        for b, (r2, wb) in enumerate(self.outer):
            for t, wa in self.inner:
                yield b, t * r2, r2, wb * r2 * wa

    def integrate(self, fn: Callable[[Any, Any], Any]):
        """int_0^inf dr2 int_0^r2 dr1 fn(r1, r2)."""
        return self.cfg.ctx.fsum(w * fn(r1, r2) for _, r1, r2, w in self.points())

    def refined(self) -> "TriangleQuadrature":
        """Same rule with both node counts doubled."""
        return TriangleQuadrature(2 * self.radial_nodes, 2 * self.angular_nodes, self.kappa, self.cfg)
