"""Eigen-solvers over configurable-precision reals.

All three solvers delegate the heavy lifting to mpmath (Cholesky, Householder
tridiagonalization with implicit QL sweeps, one-sided SVD) and add the contracts the
rest of the package relies on: ordering, normalization and residual checks.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from ..errors import NoConvergence, NotPositiveDefinite, PairingFailure
from .matrices import AntisymMatrix, SymMatrix
from .precision import PrecisionConfig

logger = logging.getLogger(__name__)


def _equilibrate(H: SymMatrix, S: SymMatrix, cfg: PrecisionConfig):
    """Scale both matrices so that S has a unit diagonal."""
    ctx = cfg.ctx
    n = S.dimension
    if H.dimension != n: raise ValueError(f"H and S differ in dimension: {H.dimension} vs {n}")
    d = []
    for i in range(n):
        if S[i, i] <= 0: raise NotPositiveDefinite(f"Overlap diagonal element {i} is not positive: {S[i, i]}")
        d.append(1 / ctx.sqrt(S[i, i]))
    Hs, Ss = ctx.matrix(n, n), ctx.matrix(n, n)
    for i in range(n):
        for j in range(i, n):
            Hs[i, j] = Hs[j, i] = d[i] * d[j] * H[i, j]
            Ss[i, j] = Ss[j, i] = d[i] * d[j] * S[i, j]
    return Hs, Ss, d


def _reduce(H: SymMatrix, S: SymMatrix, cfg: PrecisionConfig):
    """Return (A, Linv, d) with A = L^-1 H' L^-T for the equilibrated pair."""
    ctx = cfg.ctx
    Hs, Ss, d = _equilibrate(H, S, cfg)
    try:
        L = ctx.cholesky(Ss, tol=ctx.eps)
    except ValueError as exc:
        raise NotPositiveDefinite(
            f"Overlap matrix is not positive definite at {cfg.working_digits} digits ({exc}); "
            "raise the precision or shrink omega"
        ) from exc
    Linv = ctx.inverse(L)
    A = Linv * Hs * Linv.T
    n = A.rows
    for i in range(n):
        for j in range(i + 1, n):
            A[i, j] = A[j, i] = (A[i, j] + A[j, i]) / 2
    return A, Linv, d


def _eigsy(ctx, A, eigvals_only: bool = False):
    try:
        return ctx.eigsy(A, eigvals_only=eigvals_only)
    except RuntimeError as exc:
        raise NoConvergence(f"Symmetric eigensolver did not converge: {exc}") from exc


def solve_generalized_symmetric(H: SymMatrix, S: SymMatrix, n_roots: int, cfg: PrecisionConfig) -> list[tuple[Any, list]]:
    """Lowest `n_roots` eigenpairs of H c = E S c, ascending, with c^T S c = 1."""
    if n_roots < 1 or n_roots > H.dimension:
        raise ValueError(f"n_roots must lie in [1, {H.dimension}], got {n_roots}")
    ctx = cfg.ctx
    A, Linv, d = _reduce(H, S, cfg)
    E, Q = _eigsy(ctx, A)
    n = H.dimension
    h_norm = ctx.mnorm(H.entries, "F")
    pairs = []
    for r in range(n_roots):
        y = Q[:, r]
        z = Linv.T * y
        c = [d[i] * z[i] for i in range(n)]
        residual = ctx.norm(H.entries * ctx.matrix(c) - E[r] * (S.entries * ctx.matrix(c)), 2)
        if residual > cfg.eig_residual_tol * h_norm:
            raise NoConvergence(
                f"Root {r + 1} residual {ctx.nstr(residual, 5)} exceeds "
                f"{cfg.eig_residual_tol:g} * ||H||_F at {cfg.working_digits} digits"
            )
        pairs.append((E[r], c))
    logger.debug("Generalized solve n=%d, roots=%s", n, [ctx.nstr(e, 15) for e, _ in pairs])
    return pairs


def generalized_eigenvalues(H: SymMatrix, S: SymMatrix, cfg: PrecisionConfig) -> list:
    """All eigenvalues of H c = E S c, ascending (no vectors, no residual check)."""
    A, _, _ = _reduce(H, S, cfg)
    E = _eigsy(cfg.ctx, A, eigvals_only=True)
    return [E[i] for i in range(E.rows)]


def _first_dominant(ctx, Q, col: int) -> int:
    best, best_i = ctx.zero, 0
    for i in range(Q.rows):
        if abs(Q[i, col]) > best: best, best_i = abs(Q[i, col]), i
    return best_i


def symmetric_eigenpairs(B: SymMatrix, cfg: PrecisionConfig) -> list[tuple[Any, list]]:
    """(eigenvalue, unit eigenvector) pairs of B, descending by absolute value."""
    ctx = cfg.ctx
    E, Q = _eigsy(ctx, B.entries)
    n = B.dimension
    rebuilt = Q * ctx.diag([E[i] for i in range(n)]) * Q.T
    residual = ctx.mnorm(B.entries - rebuilt, "F")
    if residual > cfg.eig_residual_tol * max(ctx.mnorm(B.entries, "F"), ctx.eps):
        raise NoConvergence(f"Spectral reconstruction residual {ctx.nstr(residual, 5)} above tolerance")
    order = sorted(range(n), key=lambda i: (-abs(E[i]), _first_dominant(ctx, Q, i)))
    return [(E[i], [Q[r, i] for r in range(n)]) for i in order]


def solve_symmetric(B: SymMatrix, cfg: PrecisionConfig) -> list:
    """Full spectrum of B, descending by absolute value."""
    return [value for value, _ in symmetric_eigenpairs(B, cfg)]


def pair_singular_values(values: Sequence, tol) -> list:
    """Match singular values into equal pairs, one representative per pair.

    Pairs whose members are both below `tol` are zero modes and are dropped, as is a
    single unpaired value below `tol`.
    """
    ordered = sorted(values, key=lambda v: -v)
    pairs = []
    for i in range(0, len(ordered) - 1, 2):
        a, b = ordered[i], ordered[i + 1]
        if abs(a - b) > tol:
            raise PairingFailure(f"Singular values {a} and {b} differ by more than {tol}; matrix is not antisymmetric")
        if a < tol and b < tol: continue
        pairs.append((a + b) / 2)
    if len(ordered) % 2 and ordered[-1] >= tol:
        raise PairingFailure(f"Unpaired singular value {ordered[-1]} is not below {tol}")
    return pairs


def solve_antisymmetric_pairs(B: AntisymMatrix, cfg: PrecisionConfig) -> list:
    """Magnitudes lambda_k of the +-i*lambda_k eigenvalue pairs of B, descending."""
    ctx = cfg.ctx
    try:
        S = ctx.svd_r(B.entries, compute_uv=False)
    except RuntimeError as exc:
        raise NoConvergence(f"SVD did not converge: {exc}") from exc
    values = [S[i] for i in range(S.rows)]
    scale = max([ctx.one] + values)
    return pair_singular_values(values, cfg.cleanup_tol * scale)
