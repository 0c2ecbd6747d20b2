"""Double-precision grid oracle for the channel spectra."""

from .grid import GridSpec, check_boundary, grid_occupancies, grid_spectrum

__all__ = ["GridSpec", "check_boundary", "grid_occupancies", "grid_spectrum"]
