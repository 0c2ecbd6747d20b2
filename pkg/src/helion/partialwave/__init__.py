"""Legendre channel expansion of solved two-electron S states."""

from .channel import (
    CONVENTION,
    DEFAULT_L_MAX,
    ChannelExpansion,
    ExpansionPolicy,
    LegendreConvention,
    PartialWaveChannel,
    build_channel,
    build_channels,
    channel_norm,
    channel_norms,
    norm_quadrature,
)
from .legendre import legendre_coefficients, r12_legendre_closed, r12_legendre_coeff, r12_legendre_quadrature
from .quadrature import TriangleQuadrature, gauss_rule

__all__ = [
    "CONVENTION",
    "DEFAULT_L_MAX",
    "ChannelExpansion",
    "ExpansionPolicy",
    "LegendreConvention",
    "PartialWaveChannel",
    "TriangleQuadrature",
    "build_channel",
    "build_channels",
    "channel_norm",
    "channel_norms",
    "gauss_rule",
    "legendre_coefficients",
    "norm_quadrature",
    "r12_legendre_closed",
    "r12_legendre_coeff",
    "r12_legendre_quadrature",
]
