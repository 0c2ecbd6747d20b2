"""Schmidt/Slater decomposition of channel functions and the reduced density matrix occupancies."""

from .laguerre import RadialBasis, build_radial_basis, default_scale
from .occupancy import (
    ChannelSpectrum,
    Decomposition,
    Occupancy,
    OccupancySet,
    SpectrumKind,
    channel_spectrum,
    decompose,
    occupancies,
    occupancy_set,
    schmidt_reconstruction,
    state_scale,
    tune_scale,
)
from .projection import project_channel, project_expansion, projection_quadrature

__all__ = [
    "ChannelSpectrum",
    "Decomposition",
    "Occupancy",
    "OccupancySet",
    "RadialBasis",
    "SpectrumKind",
    "build_radial_basis",
    "channel_spectrum",
    "decompose",
    "default_scale",
    "occupancies",
    "occupancy_set",
    "project_channel",
    "project_expansion",
    "projection_quadrature",
    "schmidt_reconstruction",
    "state_scale",
    "tune_scale",
]
