"""Interaction-distance series over the 1sns Rydberg states."""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Iterable, Mapping
from typing import Optional

import pandas as pd

from ..errors import MissingState, MonotonicityWarning
from ..hylleraas import SpinSymmetry, StateLabel
from .measures import EntropyReport, interaction_distance

logger = logging.getLogger(__name__)

COLUMNS = ["n", "spin", "epsilon_linear", "epsilon_von_neumann", "log10_n", "log10_epsilon_linear", "log10_epsilon_von_neumann", "monotone"]


def figure_states(max_n: int = 6) -> list[StateLabel]:
    """Singlet 1s1s..1s{max_n}s followed by triplet 1s2s..1s{max_n}s."""
    singlets = [StateLabel(n, SpinSymmetry.SINGLET) for n in range(1, max_n + 1)]
    triplets = [StateLabel(n, SpinSymmetry.TRIPLET) for n in range(2, max_n + 1)]
    return singlets + triplets


def _log10(x: float) -> float:
    return math.log10(x) if x > 0 else float("-inf")


def distance_dataset(reports: Mapping[StateLabel, EntropyReport], states: Optional[Iterable[StateLabel]] = None) -> pd.DataFrame:
    """(n, spin, epsilon_linear, epsilon_von_neumann, logs) per state, one series per spin.

    Each state is measured from its own non-interacting limit. A series whose distances
    do not strictly decrease with n raises MonotonicityWarning and is marked in `monotone`.
    """
    states = list(states) if states is not None else figure_states()
    if not states: raise ValueError("No states requested")
    missing = [s for s in states if s not in reports]
    if missing: raise MissingState(f"Missing entropy reports for: {', '.join(str(s) for s in missing)}")

    rows = []
    for label in sorted(states, key=lambda s: (s.spin.value, s.n)):
        report = reports[label]
        eps_lin = float(interaction_distance(report.s_linear, label.reference_linear))
        eps_vn = float(interaction_distance(report.s_von_neumann, label.reference_von_neumann))
        rows.append({
            "n": label.n,
            "spin": label.spin.value,
            "epsilon_linear": eps_lin,
            "epsilon_von_neumann": eps_vn,
            "log10_n": math.log10(label.n),
            "log10_epsilon_linear": _log10(eps_lin),
            "log10_epsilon_von_neumann": _log10(eps_vn),
            "monotone": True,
        })
    df = pd.DataFrame(rows, columns=COLUMNS)

    for spin, series in df.groupby("spin", sort=False):
        decreasing = all(series[col].diff().iloc[1:].lt(0).all() for col in ("epsilon_linear", "epsilon_von_neumann"))
        if decreasing: continue
        df.loc[series.index, "monotone"] = False
        message = f"Interaction distance of the {spin} series does not decrease strictly with n"
        logger.warning(message)
        warnings.warn(message, MonotonicityWarning, stacklevel=2)
    return df
