"""Entropies of the one-particle reduced density matrix and interaction distances."""

from .figure import distance_dataset, figure_states
from .measures import (
    REFERENCE_EXCITED_LINEAR,
    REFERENCE_EXCITED_VON_NEUMANN,
    REFERENCE_GROUND,
    ChannelEntropy,
    EntropyReport,
    entropy_report,
    interaction_distance,
    linear_entropy,
    von_neumann_entropy,
)

__all__ = [
    "REFERENCE_EXCITED_LINEAR",
    "REFERENCE_EXCITED_VON_NEUMANN",
    "REFERENCE_GROUND",
    "ChannelEntropy",
    "EntropyReport",
    "distance_dataset",
    "entropy_report",
    "figure_states",
    "interaction_distance",
    "linear_entropy",
    "von_neumann_entropy",
]
