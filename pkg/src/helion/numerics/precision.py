"""Precision policy and the mpmath contexts that carry it."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

from mpmath.ctx_mp import MPContext

ENV_DIGITS = "HELION_PRECISION_DIGITS"
DEFAULT_DIGITS = 30
HIGH_OMEGA_DIGITS = 60
HIGH_OMEGA_THRESHOLD = 10


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision plus the tolerances derived from it.

    Tolerances left as None follow the digits: residuals at 10^-(d-10), spectrum
    cleanup at 10^-(d-5).
    """
    working_digits: int = DEFAULT_DIGITS
    eig_residual_tol: Optional[float] = None
    cleanup_tol: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.working_digits, int) or self.working_digits < 15:
            raise ValueError(f"working_digits must be an integer >= 15, got {self.working_digits!r}")
        if self.eig_residual_tol is None: object.__setattr__(self, "eig_residual_tol", 10.0 ** -(self.working_digits - 10))
        if self.cleanup_tol is None: object.__setattr__(self, "cleanup_tol", 10.0 ** -(self.working_digits - 5))
        if not 0 < self.cleanup_tol < self.eig_residual_tol < 1:
            raise ValueError(
                f"Invalid tolerances: need 0 < cleanup_tol ({self.cleanup_tol}) < "
                f"eig_residual_tol ({self.eig_residual_tol}) < 1"
            )

    @cached_property
    def ctx(self) -> MPContext:
        """Private mpmath context at this precision."""
        ctx = MPContext()
        ctx.dps = self.working_digits
        return ctx

    def mpf(self, value: Any):
        """Convert a number (or decimal string) into this context."""
        return self.ctx.mpf(value)

    def raised(self, extra_digits: int) -> "PrecisionConfig":
        """A config with more digits and freshly derived tolerances."""
        return PrecisionConfig(working_digits=self.working_digits + extra_digits)

    @classmethod
    def for_omega(cls, omega: int, digits: Optional[int] = None) -> "PrecisionConfig":
        """Default policy: 30 digits, at least 60 once omega exceeds 10."""
        d = digits if digits is not None else DEFAULT_DIGITS
        if omega > HIGH_OMEGA_THRESHOLD: d = max(d, HIGH_OMEGA_DIGITS)
        return cls(working_digits=d)

    @classmethod
    def from_env(cls, default: int = DEFAULT_DIGITS) -> "PrecisionConfig":
        """Read HELION_PRECISION_DIGITS, falling back to `default`."""
        raw = os.environ.get(ENV_DIGITS)
        if raw is None or not raw.strip(): return cls(working_digits=default)
        try:
            digits = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_DIGITS} must be an integer, got {raw!r}")
        return cls(working_digits=digits)
