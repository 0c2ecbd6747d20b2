"""High-level client: solve a 1sns state and report its spatial entanglement."""

from __future__ import annotations

import logging
import os
from typing import Any, Optional, Sequence

import pandas as pd

from .entropy import EntropyReport, distance_dataset, entropy_report
from .hylleraas import BasisSpec, SpinSymmetry, StateLabel, StateSolution, optimize_exponents, solve_state
from .numerics import PrecisionConfig
from .numerics.precision import ENV_DIGITS
from .partialwave import CONVENTION, DEFAULT_L_MAX
from .rdm import Decomposition, decompose, occupancies, tune_scale

logger = logging.getLogger(__name__)

DEFAULT_LA_MAX = 50
SCAN_AXES = ("omega", "l_max", "la_max")
SCAN_COLUMNS = ["terms", "energy", "trace", "s_linear", "s_von_neumann"]


def _label(state: StateLabel | str, spin: Optional[SpinSymmetry | str]) -> StateLabel:
    if isinstance(state, StateLabel): return state
    if spin is None: raise ValueError(f"A spin symmetry is needed with the label {state!r}")
    return StateLabel.parse(state, spin)


def _env_digits() -> Optional[int]:
    return PrecisionConfig.from_env().working_digits if os.environ.get(ENV_DIGITS, "").strip() else None


class Client:
    """Solver and entanglement pipeline with shared defaults.

    Calling the client solves a state with optimized exponents and returns its
    EntropyReport.
    """

    def __init__(
        self,
        Z: Any = 2,
        digits: Optional[int] = None,
        l_max: int = DEFAULT_L_MAX,
        la_max: int = DEFAULT_LA_MAX,
        interaction: Any = 1,
        scale: Optional[float] = None,
        tune: bool = False,
    ):
        if l_max < 0 or la_max < 1: raise ValueError(f"Invalid truncation: l_max={l_max}, la_max={la_max}")
        self.Z = Z
        self.digits = digits if digits is not None else _env_digits()
        self.l_max = l_max
        self.la_max = la_max
        self.interaction = interaction
        self.scale = scale
        self.tune = tune

    def __call__(self, state: StateLabel | str, spin: Optional[SpinSymmetry | str] = None, omega: Optional[int] = None, **kwargs) -> EntropyReport:
        """Solve `state` and return its entropies."""
        label = _label(state, spin)
        return self.entropy(self.solve(label, omega=omega, **kwargs), label)

    def precision(self, omega: int) -> PrecisionConfig:
        return PrecisionConfig.for_omega(omega, self.digits)

    def basis(self, label: StateLabel, omega: Optional[int] = None, alpha: Any = None, beta: Any = None) -> BasisSpec:
        """Basis for a state; unset exponents default to hydrogenic guesses."""
        omega = label.default_omega if omega is None else omega
        alpha = alpha if alpha is not None else self.Z
        beta = beta if beta is not None else float(self.Z) / label.n
        return BasisSpec(Z=self.Z, omega=omega, spin_symmetry=label.spin, alpha=alpha, beta=beta, interaction=self.interaction)

    def solve(self, state: StateLabel | str, spin: Optional[SpinSymmetry | str] = None, omega: Optional[int] = None, alpha: Any = None, beta: Any = None) -> StateSolution:
        """Fixed exponents when both are given, otherwise optimized ones."""
        label = _label(state, spin)
        if (alpha is None) != (beta is None): raise ValueError("Exponent overrides need both alpha and beta")
        basis = self.basis(label, omega, alpha, beta)
        cfg = self.precision(basis.omega)
        if alpha is not None: return solve_state(basis, label.root_index, cfg)
        _, _, solution = optimize_exponents(basis, label.root_index, cfg)
        return solution

    def decompose(self, state: StateSolution, l_max: Optional[int] = None, la_max: Optional[int] = None) -> Decomposition:
        l_max = self.l_max if l_max is None else l_max
        la_max = self.la_max if la_max is None else la_max
        if self.tune: return tune_scale(state, l_max, la_max)[1]
        return decompose(state, l_max, la_max, self.scale)

    def entropy(self, state: StateSolution, label: Optional[StateLabel] = None, l_max: Optional[int] = None, la_max: Optional[int] = None) -> EntropyReport:
        """Entropies with distances from the state's non-interacting limits."""
        label = label or StateLabel.from_root(state.basis.spin_symmetry, state.root_index)
        occ = self.decompose(state, l_max, la_max).occupancies
        return entropy_report(occ, label.reference_von_neumann, label.reference_linear)

    def scan(
        self,
        state: StateLabel | str,
        axis: str,
        values: Sequence[int],
        spin: Optional[SpinSymmetry | str] = None,
        omega: Optional[int] = None,
        alpha: Any = None,
        beta: Any = None,
        solution: Optional[StateSolution] = None,
    ) -> pd.DataFrame:
        """One row per truncation value: basis size, energy, trace and both entropies.

        Basis size and energy are only filled for the omega axis. Channel spectra do not
        depend on l_max, so an l_max scan decomposes once at the largest value.
        """
        label = _label(state, spin)
        if axis not in SCAN_AXES: raise ValueError(f"Invalid scan axis: {axis}. Expected one of {SCAN_AXES}")
        values = list(values)
        if not values: raise ValueError("Scan needs at least one value")
        if any(b <= a for a, b in zip(values, values[1:])): raise ValueError(f"Scan values must be strictly ascending, got {values}")

        rows = []
        if axis == "omega":
            for w in values:
                sol = self.solve(label, omega=w, alpha=alpha, beta=beta)
                report = self.entropy(sol, label)
                rows.append(self._row(w, report, sol.basis.size, sol.energy))
            return self._frame(axis, rows)

        sol = solution or self.solve(label, omega=omega, alpha=alpha, beta=beta)
        if axis == "l_max":
            dec = self.decompose(sol, l_max=max(values))
            for v in values:
                occ = occupancies([s for s in dec.spectra if s.l <= v], CONVENTION, sol.cfg)
                rows.append(self._row(v, entropy_report(occ)))
        else:
            for v in values:
                rows.append(self._row(v, entropy_report(self.decompose(sol, la_max=v).occupancies)))
        return self._frame(axis, rows)

    @staticmethod
    def _row(value: int, report: EntropyReport, terms: Optional[int] = None, energy: Any = None) -> dict:
        return {
            "value": value,
            "terms": terms,
            "energy": None if energy is None else float(energy),
            "trace": float(report.trace),
            "s_linear": float(report.s_linear),
            "s_von_neumann": float(report.s_von_neumann),
        }

    @staticmethod
    def _frame(axis: str, rows: list[dict]) -> pd.DataFrame:
        df = pd.DataFrame(rows, columns=["value"] + SCAN_COLUMNS).rename(columns={"value": axis})
        df["terms"] = df["terms"].astype("Int64")
        return df

    def figure(self, reports: dict[StateLabel, EntropyReport], states: Optional[Sequence[StateLabel]] = None) -> pd.DataFrame:
        return distance_dataset(reports, states)


def init(
    Z: Any = 2,
    digits: Optional[int] = None,
    l_max: int = DEFAULT_L_MAX,
    la_max: int = DEFAULT_LA_MAX,
    interaction: Any = 1,
    scale: Optional[float] = None,
    tune: bool = False,
) -> Client:
    """Initialize and return a helion client."""
    return Client(Z=Z, digits=digits, l_max=l_max, la_max=la_max, interaction=interaction, scale=scale, tune=tune)
