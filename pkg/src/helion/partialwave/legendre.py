"""Legendre channels of r12^c.

r12^c = sum_l g_l(r1, r2) P_l(cos theta) with

    g_l(r1, r2) = r>^c * sum_k coef(c, l, k) * (r</r>)^(l + 2k)

The series terminates for every c >= -1: for even c once l + k exceeds c/2, for odd c
once k exceeds (c+1)/2. Coefficients are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional

from ..numerics import PrecisionConfig

_HALF = Fraction(1, 2)


def _rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


@lru_cache(maxsize=None)
def legendre_coefficients(c: int, l: int) -> tuple[Fraction, ...]:
    """Rational coefficients of (r</r>)^(l+2k), k = 0, 1, ... in g_l of r12^c."""
    if c < -1: raise ValueError(f"r12 power must be >= -1, got {c}")
    if l < 0: raise ValueError(f"Legendre index must be nonnegative, got {l}")
    if c == -1: k_max = 0
    elif c % 2 == 0: k_max = c // 2 - l
    else: k_max = (c + 1) // 2
    lam = Fraction(-c, 2)
    return tuple(
        _rising(lam, l + k) * _rising(lam - _HALF, k) * (l + _HALF) / (_rising(_HALF, l + k + 1) * _rising(Fraction(1), k))
        for k in range(k_max + 1)
    )


def r12_legendre_closed(c: int, l: int, r1: Any, r2: Any, cfg: Optional[PrecisionConfig] = None):
    """g_l of r12^c from the terminating series."""
    cfg = cfg or PrecisionConfig()
    coeffs = legendre_coefficients(c, l)
    if not coeffs: return cfg.ctx.zero
    r1, r2 = cfg.mpf(r1), cfg.mpf(r2)
    small, big = (r1, r2) if r1 <= r2 else (r2, r1)
    rho = small / big
    rho2 = rho * rho
    total, power = cfg.ctx.zero, rho ** l
    for coef in coeffs:
        total += cfg.mpf(coef.numerator) / coef.denominator * power
        power *= rho2
    return big ** c * total


@lru_cache(maxsize=None)
def _legendre_rule(digits: int, order: int):
    cfg = PrecisionConfig(working_digits=digits)
    X, W = cfg.ctx.gauss_quadrature(order, "legendre")
    return [X[i] for i in range(order)], [W[i] for i in range(order)]


def r12_legendre_quadrature(c: int, l: int, r1: Any, r2: Any, order: int, cfg: Optional[PrecisionConfig] = None):
    """g_l of r12^c as (2l+1)/2 * int_{-1}^{1} r12^c P_l(t) dt by Gauss-Legendre."""
    cfg = cfg or PrecisionConfig()
    ctx = cfg.ctx
    r1, r2 = cfg.mpf(r1), cfg.mpf(r2)
    X, W = _legendre_rule(cfg.working_digits, order)
    s = r1 * r1 + r2 * r2
    p = 2 * r1 * r2
    total = ctx.fsum(ctx.mpf(w) * ctx.power(s - p * ctx.mpf(t), ctx.mpf(c) / 2) * ctx.legendre(l, ctx.mpf(t)) for t, w in zip(X, W))
    return (2 * l + 1) * total / 2


def r12_legendre_coeff(c: int, l: int, r1: Any, r2: Any, cfg: Optional[PrecisionConfig] = None, method: str = "closed", order: Optional[int] = None):
    """Coefficient of P_l(cos theta) in r12^c for electrons at radii r1, r2 > 0."""
    if method == "closed": return r12_legendre_closed(c, l, r1, r2, cfg)
    if method == "quadrature": return r12_legendre_quadrature(c, l, r1, r2, order or 2 * l + max(c, 0) + 4, cfg)
    raise ValueError(f"Invalid method: {method}. Expected 'closed' or 'quadrature'")
