"""Correlated two-electron basis: spin symmetry, power triples and their enumeration."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Any


class SpinSymmetry(Enum):
    """Exchange symmetry of the spatial wave function."""
    SINGLET = "singlet"
    TRIPLET = "triplet"

    @property
    def sign(self) -> int:
        return 1 if self is SpinSymmetry.SINGLET else -1

    @classmethod
    def parse(cls, value: "SpinSymmetry | str") -> "SpinSymmetry":
        if isinstance(value, cls): return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"Invalid spin symmetry: {value!r}. Expected 'singlet' or 'triplet'")


@dataclass(frozen=True, order=True)
class HylleraasTerm:
    """Powers of r12, r1 and r2 in one symmetrized basis function."""
    k: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.k, self.m, self.n) < 0: raise ValueError(f"Term powers must be nonnegative, got {self}")

    @property
    def degree(self) -> int:
        return self.k + self.m + self.n


def enumerate_terms(omega: int, spin_symmetry: SpinSymmetry | str) -> list[HylleraasTerm]:
    """Canonical (k, m, n) triples with k+m+n <= omega, sorted lexicographically."""
    if omega < 0: raise ValueError(f"omega must be nonnegative, got {omega}")
    spin = SpinSymmetry.parse(spin_symmetry)
    terms = []
    for k in range(omega + 1):
        for m in range(omega - k + 1):
            for n in range(m, omega - k - m + 1):
                if spin is SpinSymmetry.TRIPLET and m == n: continue
                terms.append(HylleraasTerm(k, m, n))
    return terms


def term_count(omega: int, spin_symmetry: SpinSymmetry | str) -> int:
    """Closed-form size of `enumerate_terms(omega, spin_symmetry)`."""
    if omega < 0: raise ValueError(f"omega must be nonnegative, got {omega}")
    total = comb(omega + 3, 3)
    diagonal = sum(j // 2 + 1 for j in range(omega + 1))
    return (total + diagonal) // 2 if SpinSymmetry.parse(spin_symmetry) is SpinSymmetry.SINGLET else (total - diagonal) // 2


@dataclass(frozen=True)
class BasisSpec:
    """Hylleraas basis for a helium-like ion of nuclear charge Z.

    `interaction` scales the 1/r12 repulsion: 1 is the physical Hamiltonian, 0 the
    non-interacting limit. Exponents may be floats, decimal strings or mpmath numbers.
    """
    Z: Any
    omega: int
    spin_symmetry: SpinSymmetry
    alpha: Any
    beta: Any
    terms: tuple[HylleraasTerm, ...] = field(default=(), repr=False)
    interaction: Any = 1

    def __post_init__(self):
        object.__setattr__(self, "spin_symmetry", SpinSymmetry.parse(self.spin_symmetry))
        if not isinstance(self.omega, int) or self.omega < 0: raise ValueError(f"omega must be a nonnegative integer, got {self.omega!r}")
        for name in ("Z", "alpha", "beta"):
            if not float(getattr(self, name)) > 0: raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        canonical = tuple(enumerate_terms(self.omega, self.spin_symmetry))
        if not self.terms: object.__setattr__(self, "terms", canonical)
        elif tuple(self.terms) != canonical:
            raise ValueError(f"Terms do not match the canonical {self.spin_symmetry.value} list for omega={self.omega}")

    @property
    def size(self) -> int:
        return len(self.terms)

    @property
    def sign(self) -> int:
        return self.spin_symmetry.sign

    def with_exponents(self, alpha: Any, beta: Any) -> "BasisSpec":
        return dataclasses.replace(self, alpha=alpha, beta=beta)

    def with_omega(self, omega: int) -> "BasisSpec":
        return dataclasses.replace(self, omega=omega, terms=())
