"""Dense symmetric and antisymmetric carriers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .precision import PrecisionConfig


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix assembled from its upper triangle."""
    dimension: int
    entries: Any

    @classmethod
    def from_upper(cls, cfg: PrecisionConfig, dimension: int, element: Callable[[int, int], Any]) -> "SymMatrix":
        """Evaluate `element(i, j)` for i <= j and mirror it."""
        m = cfg.ctx.matrix(dimension, dimension)
        for i in range(dimension):
            for j in range(i, dimension):
                m[i, j] = m[j, i] = element(i, j)
        return cls(dimension, m)

    @classmethod
    def from_rows(cls, cfg: PrecisionConfig, rows) -> "SymMatrix":
        """Build from nested sequences; asymmetric input is rejected."""
        m = cfg.ctx.matrix(rows)
        if m.rows != m.cols: raise ValueError(f"Matrix must be square, got {m.rows}x{m.cols}")
        for i in range(m.rows):
            for j in range(i + 1, m.rows):
                if m[i, j] != m[j, i]: raise ValueError(f"Matrix is not symmetric at ({i}, {j})")
        return cls(m.rows, m)

    def __getitem__(self, ij):
        return self.entries[ij]


@dataclass(frozen=True)
class AntisymMatrix:
    """Antisymmetric matrix assembled from its strict upper triangle."""
    dimension: int
    entries: Any

    @classmethod
    def from_upper(cls, cfg: PrecisionConfig, dimension: int, element: Callable[[int, int], Any]) -> "AntisymMatrix":
        """Evaluate `element(i, j)` for i < j; the lower triangle is its negative."""
        m = cfg.ctx.matrix(dimension, dimension)
        for i in range(dimension):
            for j in range(i + 1, dimension):
                v = element(i, j)
                m[i, j], m[j, i] = v, -v
        return cls(dimension, m)

    @classmethod
    def from_rows(cls, cfg: PrecisionConfig, rows) -> "AntisymMatrix":
        """Build from nested sequences; input must be exactly antisymmetric."""
        m = cfg.ctx.matrix(rows)
        if m.rows != m.cols: raise ValueError(f"Matrix must be square, got {m.rows}x{m.cols}")
        for i in range(m.rows):
            if m[i, i] != 0: raise ValueError(f"Antisymmetric matrix needs a zero diagonal, got {m[i, i]} at {i}")
            for j in range(i + 1, m.rows):
                if m[i, j] != -m[j, i]: raise ValueError(f"Matrix is not antisymmetric at ({i}, {j})")
        return cls(m.rows, m)

    def __getitem__(self, ij):
        return self.entries[ij]
