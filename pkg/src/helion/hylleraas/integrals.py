"""Closed-form Hylleraas integrals and Hamiltonian/overlap assembly.

Every matrix element reduces to

    G(a, b, c; A, B) = int dr1 dr2 dr12  r1^(a+1) r2^(b+1) r12^(c+1) exp(-A r1 - B r2)

over the triangle |r1 - r2| <= r12 <= r1 + r2, times the angular constant 8 pi^2.
Splitting at r1 = r2 leaves nested one-dimensional integrals whose values are a
Gamma function times a Gauss hypergeometric series with positive terms only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any, Optional

from ..errors import DivergentIntegral
from ..numerics import PrecisionConfig, SymMatrix
from .basis import BasisSpec, HylleraasTerm

logger = logging.getLogger(__name__)


def _nested(ctx, q: int, p: int, inner, outer):
    """int_0^inf x^p e^(-outer x) int_0^x y^q e^(-inner y) dy dx."""
    total = inner + outer
    s = p + q + 2
    return ctx.factorial(s - 1) / ((q + 1) * total ** s) * ctx.hyp2f1(s, 1, q + 2, inner / total)


def _radial_integral(ctx, a: int, b: int, c: int, alpha_s, beta_s):
    N = c + 2
    total = ctx.zero
    for j in range(1, N + 1, 2):
        total += comb(N, j) * (_nested(ctx, a + 1 + j, b + 1 + N - j, alpha_s, beta_s) + _nested(ctx, b + 1 + j, a + 1 + N - j, beta_s, alpha_s))
    return 2 * total / N


def _check_domain(a: int, b: int, c: int, alpha_s, beta_s):
    if min(a, b, c) < -1: raise DivergentIntegral(f"Radial integral diverges for powers (a={a}, b={b}, c={c}); each must be >= -1")
    if not (alpha_s > 0 and beta_s > 0): raise DivergentIntegral(f"Radial integral needs positive exponents, got {alpha_s}, {beta_s}")


def radial_integral(a: int, b: int, c: int, alpha_s: Any, beta_s: Any, cfg: Optional[PrecisionConfig] = None):
    """Exact G(a, b, c; alpha_s, beta_s) at the working precision of `cfg`."""
    cfg = cfg or PrecisionConfig()
    alpha_s, beta_s = cfg.mpf(alpha_s), cfg.mpf(beta_s)
    _check_domain(a, b, c, alpha_s, beta_s)
    return _radial_integral(cfg.ctx, a, b, c, alpha_s, beta_s)


class IntegralTable:
    """Memoized radial integrals for one precision; exponents are keyed as given."""

    def __init__(self, cfg: PrecisionConfig):
        self.cfg = cfg
        self._lookup = lru_cache(maxsize=None)(self._compute)

    def _compute(self, a: int, b: int, c: int, alpha_s, beta_s):
        _check_domain(a, b, c, alpha_s, beta_s)
        return _radial_integral(self.cfg.ctx, a, b, c, alpha_s, beta_s)

    def __call__(self, a: int, b: int, c: int, alpha_s, beta_s):
        return self._lookup(a, b, c, alpha_s, beta_s)

    @property
    def size(self) -> int:
        return self._lookup.cache_info().currsize


@dataclass(frozen=True)
class _Primitive:
    m: int
    n: int
    k: int
    a: Any
    b: Any


def _primitives(term: HylleraasTerm, alpha, beta) -> tuple[_Primitive, _Primitive]:
    """Direct piece and its 1 <-> 2 image."""
    return _Primitive(term.m, term.n, term.k, alpha, beta), _Primitive(term.n, term.m, term.k, beta, alpha)


def _primitive_elements(table: IntegralTable, p: _Primitive, q: _Primitive, Z, interaction):
    """(overlap, kinetic, potential) between two unsymmetrized primitives, without 8 pi^2."""
    M, N, K = p.m + q.m, p.n + q.n, p.k + q.k
    A, B = p.a + q.a, p.b + q.b

    def I(x, y, z):
        return table(x, y, z, A, B)

    overlap = I(M, N, K)

    t1 = p.a * q.a * overlap
    if p.m or q.m: t1 -= (p.m * q.a + q.m * p.a) * I(M - 1, N, K)
    if p.m and q.m: t1 += p.m * q.m * I(M - 2, N, K)
    t2 = p.b * q.b * overlap
    if p.n or q.n: t2 -= (p.n * q.b + q.n * p.b) * I(M, N - 1, K)
    if p.n and q.n: t2 += p.n * q.n * I(M, N - 2, K)
    t12 = 2 * p.k * q.k * I(M, N, K - 2) if p.k and q.k else 0

    tx = 0
    if p.k or q.k:
        mk = p.m * q.k + p.k * q.m
        if mk: tx += mk * (I(M, N, K - 2) - I(M - 2, N + 2, K - 2) + I(M - 2, N, K)) / 2
        nk = p.n * q.k + p.k * q.n
        if nk: tx += nk * (I(M, N, K - 2) - I(M + 2, N - 2, K - 2) + I(M, N - 2, K)) / 2
        ak = p.a * q.k + p.k * q.a
        tx -= ak * (I(M + 1, N, K - 2) - I(M - 1, N + 2, K - 2) + I(M - 1, N, K)) / 2
        bk = p.b * q.k + p.k * q.b
        tx -= bk * (I(M, N + 1, K - 2) - I(M + 2, N - 1, K - 2) + I(M, N - 1, K)) / 2

    kinetic = (t1 + t2 + t12 + tx) / 2
    potential = -Z * (I(M - 1, N, K) + I(M, N - 1, K))
    if interaction: potential += interaction * I(M, N, K - 1)
    return overlap, kinetic, potential


@dataclass(frozen=True)
class HamiltonianParts:
    """Overlap, kinetic and potential matrices over the symmetrized basis."""
    overlap: SymMatrix
    kinetic: SymMatrix
    potential: SymMatrix

    @property
    def hamiltonian(self) -> SymMatrix:
        return SymMatrix(self.kinetic.dimension, self.kinetic.entries + self.potential.entries)


def _exponents(basis: BasisSpec, cfg: PrecisionConfig):
    return cfg.mpf(basis.Z), cfg.mpf(basis.alpha), cfg.mpf(basis.beta), cfg.mpf(basis.interaction)


def assemble_parts(basis: BasisSpec, cfg: Optional[PrecisionConfig] = None, table: Optional[IntegralTable] = None) -> HamiltonianParts:
    """S, T and V with the exchanged pieces folded in at the integral level."""
    cfg = cfg or PrecisionConfig.for_omega(basis.omega)
    table = table or IntegralTable(cfg)
    ctx = cfg.ctx
    Z, alpha, beta, interaction = _exponents(basis, cfg)
    angular = 8 * ctx.pi ** 2
    prims = [_primitives(t, alpha, beta) for t in basis.terms]
    sign = basis.sign
    n = basis.size
    S, T, V = ctx.matrix(n, n), ctx.matrix(n, n), ctx.matrix(n, n)
    for i in range(n):
        direct_i = prims[i][0]
        for j in range(i, n):
            direct_j, exchange_j = prims[j]
            s_d, t_d, v_d = _primitive_elements(table, direct_i, direct_j, Z, interaction)
            s_x, t_x, v_x = _primitive_elements(table, direct_i, exchange_j, Z, interaction)
            # <e_i|O|e_j> = <d_i|O|d_j> and <e_i|O|d_j> = <d_i|O|e_j> by relabelling the electrons
            S[i, j] = S[j, i] = 2 * angular * (s_d + sign * s_x)
            T[i, j] = T[j, i] = 2 * angular * (t_d + sign * t_x)
            V[i, j] = V[j, i] = 2 * angular * (v_d + sign * v_x)
    logger.debug("Assembled %d x %d matrices using %d distinct integrals", n, n, table.size)
    return HamiltonianParts(SymMatrix(n, S), SymMatrix(n, T), SymMatrix(n, V))


def assemble_matrices(basis: BasisSpec, cfg: Optional[PrecisionConfig] = None) -> tuple[SymMatrix, SymMatrix]:
    """(H, S) over the symmetrized basis functions."""
    parts = assemble_parts(basis, cfg)
    return parts.hamiltonian, parts.overlap


def assemble_overlap(basis: BasisSpec, cfg: Optional[PrecisionConfig] = None) -> SymMatrix:
    """S alone, for states whose Hamiltonian is not needed."""
    cfg = cfg or PrecisionConfig.for_omega(basis.omega)
    table = IntegralTable(cfg)
    alpha, beta = cfg.mpf(basis.alpha), cfg.mpf(basis.beta)
    angular = 8 * cfg.ctx.pi ** 2
    prims = [_primitives(t, alpha, beta) for t in basis.terms]

    def element(i, j):
        d_i, (d_j, e_j) = prims[i][0], prims[j]
        direct = table(d_i.m + d_j.m, d_i.n + d_j.n, d_i.k + d_j.k, d_i.a + d_j.a, d_i.b + d_j.b)
        exchange = table(d_i.m + e_j.m, d_i.n + e_j.n, d_i.k + e_j.k, d_i.a + e_j.a, d_i.b + e_j.b)
        return 2 * angular * (direct + basis.sign * exchange)

    return SymMatrix.from_upper(cfg, basis.size, element)


def pair_element(basis: BasisSpec, i: int, j: int, cfg: Optional[PrecisionConfig] = None):
    """<phi_i|H|phi_j> from the four direct/exchange combinations, without symmetry shortcuts."""
    cfg = cfg or PrecisionConfig.for_omega(basis.omega)
    table = IntegralTable(cfg)
    Z, alpha, beta, interaction = _exponents(basis, cfg)
    left, right = _primitives(basis.terms[i], alpha, beta), _primitives(basis.terms[j], alpha, beta)
    total = cfg.ctx.zero
    for si, p in zip((1, basis.sign), left):
        for sj, q in zip((1, basis.sign), right):
            _, t, v = _primitive_elements(table, p, q, Z, interaction)
            total += si * sj * (t + v)
    return 8 * cfg.ctx.pi ** 2 * total
