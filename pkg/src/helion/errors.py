"""Exceptions and warnings raised by helion."""


class HelionError(Exception):
    """Base class for every helion failure."""


class NotPositiveDefinite(HelionError, ValueError):
    """Overlap matrix failed Cholesky factorization at the working precision."""


class NoConvergence(HelionError, RuntimeError):
    """An iterative stage exceeded its iteration cap."""


class PairingFailure(HelionError, ValueError):
    """Singular values of a supposedly antisymmetric matrix do not come in pairs."""


class DivergentIntegral(HelionError, ValueError):
    """Radial integral requested outside its domain of convergence."""


class ZeroNorm(HelionError, ValueError):
    """A state with vanishing norm cannot be normalized."""


class QuadratureNotConverged(HelionError, RuntimeError):
    """Doubling the quadrature order changed the projected matrix."""


class TraceOutOfRange(HelionError, ValueError):
    """Occupancies sum above one: a convention or normalization bug."""


class BoundaryNotDecayed(HelionError, ValueError):
    """Channel function is still significant at the grid cutoff."""


class MissingState(HelionError, KeyError):
    """A state needed by a series or a figure is absent."""


class ArtifactError(HelionError, ValueError):
    """A state artifact is missing or malformed."""


class TraceWarning(UserWarning):
    """Occupancy trace outside the window the entropy formulas assume."""


class MonotonicityWarning(UserWarning):
    """An interaction-distance series does not decrease with n."""
