"""Labels of the 1sns S states and their published reference values."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .basis import SpinSymmetry

_LABEL = re.compile(r"^1s([1-9])s$")


@dataclass(frozen=True)
class StateLabel:
    """A 1sns state of given spin, e.g. StateLabel.parse("1s2s", "triplet")."""
    n: int
    spin: SpinSymmetry

    def __post_init__(self):
        object.__setattr__(self, "spin", SpinSymmetry.parse(self.spin))
        if not 1 <= self.n <= 9: raise ValueError(f"Principal number must lie in [1, 9], got {self.n}")
        if self.spin is SpinSymmetry.TRIPLET and self.n == 1: raise ValueError("1s1s has no triplet S state")

    @classmethod
    def parse(cls, label: str, spin: SpinSymmetry | str) -> "StateLabel":
        match = _LABEL.match(label.strip().lower())
        if not match: raise ValueError(f"Invalid state label: {label!r}. Expected '1sns' with 1 <= n <= 9")
        return cls(int(match.group(1)), SpinSymmetry.parse(spin))

    @classmethod
    def from_root(cls, spin: SpinSymmetry | str, root_index: int) -> "StateLabel":
        """Inverse of `root_index`."""
        spin = SpinSymmetry.parse(spin)
        return cls(root_index if spin is SpinSymmetry.SINGLET else root_index + 1, spin)

    @property
    def label(self) -> str:
        return f"1s{self.n}s"

    @property
    def root_index(self) -> int:
        """Position among the Rayleigh-Ritz roots of the state's symmetry."""
        return self.n if self.spin is SpinSymmetry.SINGLET else self.n - 1

    @property
    def is_ground(self) -> bool:
        return self.n == 1

    @property
    def reference_linear(self) -> float:
        """Linear entropy of the non-interacting limit."""
        return 0.0 if self.is_ground else 0.5

    @property
    def reference_von_neumann(self) -> float:
        """von Neumann entropy (bits) of the non-interacting limit."""
        return 0.0 if self.is_ground else 1.0

    @property
    def default_omega(self) -> int:
        return 15 if self.spin is SpinSymmetry.SINGLET else 16

    def __str__(self) -> str:
        return f"{self.label} {self.spin.value}"


@dataclass(frozen=True)
class ReferenceValues:
    energy: float
    s_linear: float
    s_von_neumann: float


_S, _T = SpinSymmetry.SINGLET, SpinSymmetry.TRIPLET

# Converged helium values (Z = 2, 444 terms, l_max = 40, la_max = 50).
REFERENCE_VALUES: dict[StateLabel, ReferenceValues] = {
    StateLabel(1, _S): ReferenceValues(-2.90372437, 0.01591564, 0.08489987),
    StateLabel(2, _S): ReferenceValues(-2.14597404, 0.48874040, 0.99191721),
    StateLabel(3, _S): ReferenceValues(-2.06127196, 0.49725195, 0.99873620),
    StateLabel(4, _S): ReferenceValues(-2.03358497, 0.49892499, 0.99967147),
    StateLabel(5, _S): ReferenceValues(-2.02117316, 0.49947116, 0.99990742),
    StateLabel(6, _S): ReferenceValues(-2.01455645, 0.49970073, 0.99997755),
    StateLabel(2, _T): ReferenceValues(-2.17522937, 0.50037593, 1.00552680),
    StateLabel(3, _T): ReferenceValues(-2.06868906, 0.50007327, 1.00125237),
    StateLabel(4, _T): ReferenceValues(-2.03651200, 0.50002655, 1.00049300),
    StateLabel(5, _T): ReferenceValues(-2.02261852, 0.50001261, 1.00024725),
    StateLabel(6, _T): ReferenceValues(-2.01537422, 0.50000683, 1.00014076),
}
