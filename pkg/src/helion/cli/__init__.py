"""Command-line front end: `helion solve | entropy | scan | figure`."""

from .artifact import default_artifact_name, format_artifact, parse_artifact, read_artifact, write_artifact
from .config import ConfigError, RunConfig, build_config, read_config_file
from .main import EXIT_CONFIG, EXIT_OK, EXIT_PIPELINE, EXIT_SOLVER, build_parser, main, run

__all__ = [
    "ConfigError",
    "EXIT_CONFIG",
    "EXIT_OK",
    "EXIT_PIPELINE",
    "EXIT_SOLVER",
    "RunConfig",
    "build_config",
    "build_parser",
    "default_artifact_name",
    "format_artifact",
    "main",
    "parse_artifact",
    "read_artifact",
    "read_config_file",
    "run",
    "write_artifact",
]
