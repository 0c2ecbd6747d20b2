"""Run configuration: built-in defaults < HELION_PRECISION_DIGITS < --config file < flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Optional

from ..hylleraas import SpinSymmetry, StateLabel, term_count
from ..numerics.precision import DEFAULT_DIGITS, ENV_DIGITS

FORMATS = ("csv", "tsv")


class ConfigError(ValueError):
    """Invalid command-line or config-file settings."""


@dataclass(frozen=True)
class RunConfig:
    state: str = "1s1s"
    spin: str = "singlet"
    omega: Optional[int] = None
    l_max: int = 40
    la_max: int = 50
    digits: int = DEFAULT_DIGITS
    alpha: Optional[float] = None
    beta: Optional[float] = None
    output: Optional[str] = None
    format: str = "csv"
    Z: float = 2.0
    interaction: float = 1.0
    scale: Optional[float] = None
    tune_scale: bool = False

    def __post_init__(self):
        try:
            StateLabel.parse(self.state, self.spin)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if self.omega is not None and self.omega < 0: raise ConfigError(f"omega must be nonnegative, got {self.omega}")
        size = term_count(self.resolved_omega, self.label.spin)
        if self.label.root_index > size:
            raise ConfigError(f"{self.label} needs root {self.label.root_index} but the omega={self.resolved_omega} {self.label.spin.value} basis has {size} terms; raise omega")
        for name in ("l_max", "la_max", "digits", "Z"):
            if getattr(self, name) <= 0 and not (name == "l_max" and self.l_max == 0):
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.digits < 15: raise ConfigError(f"digits must be at least 15, got {self.digits}")
        if (self.alpha is None) != (self.beta is None): raise ConfigError("Exponent overrides need both alpha and beta")
        if self.alpha is not None and not (self.alpha > 0 and self.beta > 0): raise ConfigError(f"Exponents must be positive, got {self.alpha}, {self.beta}")
        if self.format not in FORMATS: raise ConfigError(f"Invalid output format: {self.format}. Expected one of {FORMATS}")
        if self.scale is not None and self.scale <= 0: raise ConfigError(f"scale must be positive, got {self.scale}")

    @property
    def label(self) -> StateLabel:
        return StateLabel.parse(self.state, self.spin)

    @property
    def resolved_omega(self) -> int:
        return self.label.default_omega if self.omega is None else self.omega

    @property
    def separator(self) -> str:
        return "\t" if self.format == "tsv" else ","

    def echo(self) -> list[str]:
        """key=value lines describing the run, in field order."""
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]


_TYPES: dict[str, Any] = {f.name: f.type for f in fields(RunConfig)}
_INT_KEYS = {"omega", "l_max", "la_max", "digits"}
_FLOAT_KEYS = {"alpha", "beta", "Z", "interaction", "scale"}
_BOOL_KEYS = {"tune_scale"}


def _coerce(key: str, raw: str) -> Any:
    value = raw.strip()
    try:
        if key in _INT_KEYS: return int(value)
        if key in _FLOAT_KEYS: return float(value)
    except ValueError:
        raise ConfigError(f"Invalid value for {key}: {raw!r}")
    if key in _BOOL_KEYS:
        if value.lower() in ("1", "true", "yes", "on"): return True
        if value.lower() in ("0", "false", "no", "off"): return False
        raise ConfigError(f"Invalid boolean for {key}: {raw!r}")
    if key == "spin": return SpinSymmetry.parse(value).value if value.lower() in ("singlet", "triplet") else value
    return value


def read_config_file(path: str | Path) -> dict[str, Any]:
    """Flat key=value file; '#' starts a comment, blank lines are ignored."""
    path = Path(path)
    if not path.is_file(): raise ConfigError(f"Config file not found: {path}")
    out: dict[str, Any] = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line: continue
        if "=" not in line: raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _TYPES: raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def env_overrides() -> dict[str, Any]:
    raw = os.environ.get(ENV_DIGITS, "").strip()
    if not raw: return {}
    try:
        return {"digits": int(raw)}
    except ValueError:
        raise ConfigError(f"{ENV_DIGITS} must be an integer, got {raw!r}")


def build_config(flags: dict[str, Any], config_file: Optional[str | Path] = None) -> RunConfig:
    """Merge the layers; flags left as None do not override."""
    values: dict[str, Any] = {}
    values.update(env_overrides())
    if config_file: values.update(read_config_file(config_file))
    values.update({k: v for k, v in flags.items() if k in _TYPES and v is not None})
    try:
        return RunConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
