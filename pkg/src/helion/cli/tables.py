"""Tabular CLI output: DataFrames preceded by '#' metadata lines."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional, TextIO

import pandas as pd

from .. import __version__
from ..entropy import EntropyReport
from ..hylleraas import REFERENCE_VALUES, StateLabel, StateSolution
from .config import RunConfig

MISSING = "—"
FLOAT_FORMAT = "%.15g"
SUMMARY_DIGITS = 15


def metadata_lines(config: RunConfig, command: str, extra: Optional[dict[str, Any]] = None) -> list[str]:
    lines = [f"# helion {__version__}", f"# command={command}"]
    lines += [f"# {item}" for item in config.echo()]
    lines += [f"# {k}={v}" for k, v in (extra or {}).items()]
    return lines


def write_table(df: pd.DataFrame, stream: TextIO, config: RunConfig):
    df.to_csv(stream, sep=config.separator, index=False, na_rep=MISSING, float_format=FLOAT_FORMAT)


def write_tables(path: Optional[str | Path], stream: Optional[TextIO], header: list[str], frames: list[pd.DataFrame], config: RunConfig):
    """Write to `path` when given, otherwise to `stream`; frames are separated by a blank line."""
    def emit(out: TextIO):
        out.write("\n".join(header) + "\n")
        for i, df in enumerate(frames):
            if i: out.write("\n")
            write_table(df, out, config)

    if path is None:
        emit(stream)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as out:
        emit(out)


def _fmt(solution: StateSolution, value: Any) -> str:
    return solution.cfg.ctx.nstr(solution.cfg.mpf(value), SUMMARY_DIGITS)


def report_summary(solution: StateSolution, label: StateLabel, report: EntropyReport) -> pd.DataFrame:
    """(quantity, value) rows; values are decimal strings at full report precision."""
    rows = [("energy", _fmt(solution, solution.energy))]
    reference = REFERENCE_VALUES.get(label)
    if reference is not None: rows.append(("reference_energy", repr(reference.energy)))
    rows += [
        ("trace", _fmt(solution, report.trace)),
        ("s_linear", _fmt(solution, report.s_linear)),
        ("s_von_neumann", _fmt(solution, report.s_von_neumann)),
        ("reference_linear", repr(float(label.reference_linear))),
        ("reference_von_neumann", repr(float(label.reference_von_neumann))),
        ("epsilon_linear", _fmt(solution, report.epsilon_linear)),
        ("epsilon_von_neumann", _fmt(solution, report.epsilon)),
    ]
    return pd.DataFrame(rows, columns=["quantity", "value"])
