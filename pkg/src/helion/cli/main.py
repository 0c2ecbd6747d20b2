"""helion command line: solve, entropy, scan and figure subcommands.

Exit codes: 0 success, 2 invalid configuration, 3 solver failure, 4 pipeline failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .. import __version__
from ..client import SCAN_AXES, Client
from ..entropy import distance_dataset, figure_states
from ..errors import HelionError
from ..hylleraas import StateLabel
from .artifact import default_artifact_name, read_artifact, write_artifact
from .config import ConfigError, RunConfig, build_config
from .tables import metadata_lines, report_summary, write_tables

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_PIPELINE = 4


def _common(parser: argparse.ArgumentParser, state: bool = True):
    parser.add_argument("--config", help="key=value file; explicit flags take precedence")
    if state:
        parser.add_argument("--state", help="State label 1sns, e.g. 1s2s (default 1s1s)")
        parser.add_argument("--spin", choices=["singlet", "triplet"], help="Spin symmetry (default singlet)")
        parser.add_argument("--omega", type=int, help="Hylleraas degree cap (default 15 singlet, 16 triplet)")
        parser.add_argument("--alpha", type=float, help="Fixed exponent of r1 (needs --beta)")
        parser.add_argument("--beta", type=float, help="Fixed exponent of r2 (needs --alpha)")
    parser.add_argument("--digits", type=int, help="Working precision in decimal digits")
    parser.add_argument("--Z", type=float, dest="Z", help="Nuclear charge (default 2)")
    parser.add_argument("--interaction", type=float, help="Scale of the 1/r12 term (default 1)")
    parser.add_argument("--output", "-o", help="Output file (default: stdout, or the artifact name for solve)")


def _pipeline(parser: argparse.ArgumentParser):
    parser.add_argument("--l-max", type=int, dest="l_max", help="Partial-wave cutoff (default 40)")
    parser.add_argument("--la-max", type=int, dest="la_max", help="Laguerre basis size (default 50)")
    parser.add_argument("--scale", type=float, help="Laguerre scale (default from the state's effective n)")
    parser.add_argument("--tune-scale", action="store_true", default=None, dest="tune_scale", help="Maximize the trace over the Laguerre scale")
    parser.add_argument("--format", choices=["csv", "tsv"], help="Table format (default csv)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helion", description="Spatial entanglement of helium-like 1sns S states.")
    parser.add_argument("--version", action="version", version=f"helion {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log progress at DEBUG level")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Log errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Solve a state and write its artifact")
    _common(solve)

    entropy = sub.add_parser("entropy", help="Entropy report for a solved state")
    _common(entropy)
    _pipeline(entropy)
    entropy.add_argument("--artifact", help="State artifact (default: <state>-<spin>.state)")

    scan = sub.add_parser("scan", help="Convergence scan along one truncation axis")
    _common(scan)
    _pipeline(scan)
    scan.add_argument("--axis", required=True, choices=SCAN_AXES)
    scan.add_argument("--values", required=True, type=int, nargs="+", help="Strictly ascending axis values")
    scan.add_argument("--artifact", help="Reuse a solved state for l_max and la_max scans")

    figure = sub.add_parser("figure", help="Interaction-distance dataset over the Rydberg series")
    _common(figure, state=False)
    _pipeline(figure)
    figure.add_argument("--states", nargs="*", help="label:spin entries, e.g. 1s2s:triplet (default: n = 1..6 of both spins)")
    figure.add_argument("--artifacts-dir", default=".", help="Directory holding <state>-<spin>.state artifacts")
    return parser


def _configure_logging(args: argparse.Namespace):
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def _client(config: RunConfig) -> Client:
    return Client(
        Z=config.Z,
        digits=config.digits,
        l_max=config.l_max,
        la_max=config.la_max,
        interaction=config.interaction,
        scale=config.scale,
        tune=config.tune_scale,
    )


def _parse_states(entries: Sequence[str]) -> list[StateLabel]:
    labels = []
    for entry in entries:
        label, sep, spin = entry.partition(":")
        if not sep: raise ConfigError(f"Invalid state entry: {entry!r}. Expected label:spin, e.g. 1s2s:triplet")
        try:
            labels.append(StateLabel.parse(label, spin))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    return labels


def cmd_solve(config: RunConfig) -> int:
    label = config.label
    try:
        solution = _client(config).solve(label, omega=config.resolved_omega, alpha=config.alpha, beta=config.beta)
    except HelionError as exc:
        logger.error("Solver failed for %s: %s: %s", label, type(exc).__name__, exc)
        return EXIT_SOLVER
    except ValueError as exc:
        logger.error("Invalid solve request for %s: %s", label, exc)
        return EXIT_CONFIG
    path = write_artifact(solution, config.output or default_artifact_name(label))
    logger.info("%s: E = %s with %d terms, written to %s", label, solution.cfg.ctx.nstr(solution.energy, 15), solution.basis.size, path)
    return EXIT_OK


def cmd_entropy(config: RunConfig, artifact: Optional[str] = None) -> int:
    label = config.label
    try:
        solution = read_artifact(artifact or default_artifact_name(label))
        label = StateLabel.from_root(solution.basis.spin_symmetry, solution.root_index)
        report = _client(config).entropy(solution, label)
    except HelionError as exc:
        logger.error("Entropy pipeline failed: %s", exc)
        return EXIT_PIPELINE
    header = metadata_lines(config, "entropy", {"state": str(label), "omega": solution.basis.omega, "terms": solution.basis.size})
    write_tables(config.output, sys.stdout, header, [report_summary(solution, label, report), report.to_frame()], config)
    return EXIT_OK


def cmd_scan(config: RunConfig, axis: str, values: Sequence[int], artifact: Optional[str] = None) -> int:
    values = list(values)
    if any(b <= a for a, b in zip(values, values[1:])):
        logger.error("Scan values must be strictly ascending, got %s", values)
        return EXIT_CONFIG
    label = config.label
    try:
        solution = read_artifact(artifact) if artifact and axis != "omega" else None
        df = _client(config).scan(label, axis, values, omega=config.resolved_omega, alpha=config.alpha, beta=config.beta, solution=solution)
    except HelionError as exc:
        logger.error("Scan failed: %s", exc)
        return EXIT_PIPELINE
    except ValueError as exc:
        logger.error("Invalid scan request: %s", exc)
        return EXIT_CONFIG
    write_tables(config.output, sys.stdout, metadata_lines(config, "scan", {"axis": axis}), [df], config)
    return EXIT_OK


def cmd_figure(config: RunConfig, states: Optional[Sequence[str]], artifacts_dir: str | Path = ".") -> int:
    if states is not None and not states:
        logger.error("No states requested")
        return EXIT_CONFIG
    labels = _parse_states(states) if states is not None else figure_states()
    directory = Path(artifacts_dir)
    paths = {label: directory / default_artifact_name(label) for label in labels}
    missing = [str(label) for label, path in paths.items() if not path.is_file()]
    if missing:
        logger.error("Missing state artifacts: %s", ", ".join(missing))
        return EXIT_PIPELINE
    client = _client(config)
    try:
        reports = {label: client.entropy(read_artifact(path), label) for label, path in paths.items()}
        df = distance_dataset(reports, labels)
    except HelionError as exc:
        logger.error("Figure pipeline failed: %s", exc)
        return EXIT_PIPELINE
    write_tables(config.output, sys.stdout, metadata_lines(config, "figure"), [df], config)
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        config = build_config(vars(args), args.config)
        if args.command == "figure" and args.states is not None:
            _parse_states(args.states)
    except ConfigError as exc:
        logger.error("Invalid configuration: %s", exc)
        return EXIT_CONFIG

    if args.command == "solve": return cmd_solve(config)
    if args.command == "entropy": return cmd_entropy(config, args.artifact)
    if args.command == "scan": return cmd_scan(config, args.axis, args.values, args.artifact)
    return cmd_figure(config, args.states, args.artifacts_dir)


def main(argv: Optional[Sequence[str]] = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
