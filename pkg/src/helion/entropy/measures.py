"""Linear and von Neumann entropies of reduced density matrix occupancies.

All logarithms are base 2: von Neumann entropies are in bits.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Any, Optional

import pandas as pd

from ..errors import TraceWarning
from ..rdm import OccupancySet

logger = logging.getLogger(__name__)

TRACE_WINDOW = (0.99, 1 + 1e-6)

# Non-interacting limits: product state for the ground state, a single determinant otherwise.
REFERENCE_GROUND = 0.0
REFERENCE_EXCITED_LINEAR = 0.5
REFERENCE_EXCITED_VON_NEUMANN = 1.0
SANCTIONED_REFERENCES = (REFERENCE_GROUND, REFERENCE_EXCITED_LINEAR, REFERENCE_EXCITED_VON_NEUMANN)


def _check_trace(occ: OccupancySet):
    lo, hi = TRACE_WINDOW
    if not lo <= occ.trace <= hi:
        message = f"Occupancy trace {occ.cfg.ctx.nstr(occ.trace, 12)} outside [{lo}, {hi}]; entropies assume a normalized state"
        logger.warning(message)
        warnings.warn(message, TraceWarning, stacklevel=3)


def _linear_terms(occ: OccupancySet) -> list:
    return [e.degeneracy * e.occupancy ** 2 for e in occ.entries]


def _von_neumann_terms(occ: OccupancySet) -> list:
    ctx = occ.cfg.ctx
    return [-e.degeneracy * e.occupancy * ctx.log(e.occupancy, 2) for e in occ.entries if e.occupancy > 0]


def linear_entropy(occ: OccupancySet):
    """S_L = 1 - sum (2l+1) Lambda^2."""
    _check_trace(occ)
    return 1 - occ.cfg.ctx.fsum(_linear_terms(occ))


def von_neumann_entropy(occ: OccupancySet):
    """S_vN = -sum (2l+1) Lambda log2 Lambda, with 0 log 0 = 0."""
    _check_trace(occ)
    return occ.cfg.ctx.fsum(_von_neumann_terms(occ))


def interaction_distance(s: Any, reference: Any, strict: bool = False):
    """|S - S0|: entanglement measured from the non-interacting limit.

    A reference outside SANCTIONED_REFERENCES raises when `strict` and is logged otherwise.
    """
    if float(reference) not in SANCTIONED_REFERENCES:
        message = f"Invalid reference entropy: {reference}. Expected one of {SANCTIONED_REFERENCES}"
        if strict: raise ValueError(message)
        logger.warning("%s; using it anyway", message)
    return abs(s - reference)


@dataclass(frozen=True)
class ChannelEntropy:
    """Share of each entropy carried by one channel.

    `linear` is sum (2l+1) Lambda (1 - Lambda); over all channels it adds up to
    S_L - (1 - trace).
    """
    l: int
    linear: Any
    von_neumann: Any


@dataclass(frozen=True)
class EntropyReport:
    s_linear: Any
    s_von_neumann: Any
    trace: Any
    per_channel: tuple[ChannelEntropy, ...] = ()
    epsilon: Optional[Any] = None
    reference_entropy: Optional[Any] = None
    epsilon_linear: Optional[Any] = None
    reference_linear: Optional[Any] = None

    def to_frame(self) -> pd.DataFrame:
        """Per-channel breakdown as a DataFrame."""
        rows = [{"l": c.l, "s_linear": float(c.linear), "s_von_neumann": float(c.von_neumann)} for c in self.per_channel]
        return pd.DataFrame(rows, columns=["l", "s_linear", "s_von_neumann"])

    def summary(self) -> dict[str, Any]:
        """Scalar fields by name, omitting distances that were not requested."""
        out = {"trace": self.trace, "s_linear": self.s_linear, "s_von_neumann": self.s_von_neumann}
        if self.epsilon_linear is not None: out["epsilon_linear"] = self.epsilon_linear
        if self.epsilon is not None: out["epsilon_von_neumann"] = self.epsilon
        return out


def entropy_report(occ: OccupancySet, reference_von_neumann: Optional[Any] = None, reference_linear: Optional[Any] = None) -> EntropyReport:
    """Both entropies, the per-channel breakdown and, when references are given, the distances."""
    ctx = occ.cfg.ctx
    s_lin = linear_entropy(occ)
    s_vn = von_neumann_entropy(occ)
    per_channel = []
    for l in occ.channels:
        entries = occ.for_channel(l)
        partial_linear = ctx.fsum(e.weight * (1 - e.occupancy) for e in entries)
        partial_vn = ctx.fsum(-e.weight * ctx.log(e.occupancy, 2) for e in entries if e.occupancy > 0)
        per_channel.append(ChannelEntropy(l, partial_linear, partial_vn))
    return EntropyReport(
        s_linear=s_lin,
        s_von_neumann=s_vn,
        trace=occ.trace,
        per_channel=tuple(per_channel),
        epsilon=None if reference_von_neumann is None else interaction_distance(s_vn, reference_von_neumann),
        reference_entropy=reference_von_neumann,
        epsilon_linear=None if reference_linear is None else interaction_distance(s_lin, reference_linear),
        reference_linear=reference_linear,
    )
