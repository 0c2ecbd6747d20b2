"""Plain-text state artifacts.

A header of `key = value` lines, the column line `k m n coefficient`, then one line per
basis term. Numbers are decimal at the full working precision:

    # helion state artifact
    state = 1s1s
    spin = singlet
    Z = 2.0
    omega = 5
    ...
    k m n coefficient
    0 0 0 2.8934...
"""

from __future__ import annotations

from pathlib import Path

from .. import __version__
from ..errors import ArtifactError
from ..hylleraas import BasisSpec, HylleraasTerm, StateLabel, StateSolution, normalize
from ..numerics import PrecisionConfig

COLUMNS_LINE = "k m n coefficient"
HEADER_KEYS = ("state", "spin", "Z", "omega", "alpha", "beta", "root", "energy", "digits", "interaction", "terms")


def default_artifact_name(label: StateLabel) -> str:
    return f"{label.label}-{label.spin.value}.state"


def format_artifact(solution: StateSolution) -> str:
    """Artifact text; coefficients are written normalized."""
    cfg = solution.cfg
    ctx = cfg.ctx
    digits = cfg.working_digits
    basis = solution.basis
    label = StateLabel.from_root(basis.spin_symmetry, solution.root_index)

    def num(x) -> str:
        return ctx.nstr(cfg.mpf(x), digits, strip_zeros=False)

    header = {
        "state": label.label,
        "spin": basis.spin_symmetry.value,
        "Z": num(basis.Z),
        "omega": basis.omega,
        "alpha": num(basis.alpha),
        "beta": num(basis.beta),
        "root": solution.root_index,
        "energy": num(solution.energy),
        "digits": digits,
        "interaction": num(basis.interaction),
        "terms": basis.size,
    }
    lines = [f"# helion {__version__} state artifact"]
    lines += [f"{k} = {header[k]}" for k in HEADER_KEYS]
    lines.append(COLUMNS_LINE)
    for term, c in zip(basis.terms, solution.normalized_coefficients):
        lines.append(f"{term.k} {term.m} {term.n} {num(c)}")
    return "\n".join(lines) + "\n"


def write_artifact(solution: StateSolution, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_artifact(solution))
    return path


def parse_artifact(text: str, source: str = "<artifact>") -> StateSolution:
    """Rebuild the solution; the overlap matrix is recomputed on normalization."""
    header: dict[str, str] = {}
    lines = iter(text.splitlines())
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"): continue
        if line == COLUMNS_LINE: break
        if "=" not in line: raise ArtifactError(f"{source}: malformed header line {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        header[key] = value
    else:
        raise ArtifactError(f"{source}: missing '{COLUMNS_LINE}' line")
    missing = [k for k in HEADER_KEYS if k not in header]
    if missing: raise ArtifactError(f"{source}: missing header keys {missing}")

    try:
        cfg = PrecisionConfig(working_digits=int(header["digits"]))
        basis = BasisSpec(
            Z=cfg.mpf(header["Z"]),
            omega=int(header["omega"]),
            spin_symmetry=header["spin"],
            alpha=cfg.mpf(header["alpha"]),
            beta=cfg.mpf(header["beta"]),
            interaction=cfg.mpf(header["interaction"]),
        )
        root = int(header["root"])
        energy = cfg.mpf(header["energy"])
    except ValueError as exc:
        raise ArtifactError(f"{source}: invalid header ({exc})") from exc

    coefficients = []
    for expected, line in zip(basis.terms, (l for l in lines if l.strip())):
        parts = line.split()
        if len(parts) != 4: raise ArtifactError(f"{source}: malformed term line {line!r}")
        try:
            term = HylleraasTerm(int(parts[0]), int(parts[1]), int(parts[2]))
            value = cfg.mpf(parts[3])
        except ValueError as exc:
            raise ArtifactError(f"{source}: malformed term line {line!r}") from exc
        if term != expected: raise ArtifactError(f"{source}: expected term {expected}, found {term}")
        coefficients.append(value)
    if len(coefficients) != basis.size or int(header["terms"]) != basis.size:
        raise ArtifactError(f"{source}: expected {basis.size} terms, found {len(coefficients)}")
    return StateSolution(basis, root, energy, tuple(coefficients), cfg.ctx.one, cfg)


def read_artifact(path: str | Path, normalized: bool = True) -> StateSolution:
    path = Path(path)
    if not path.is_file(): raise ArtifactError(f"artifact not found: {path}")
    solution = parse_artifact(path.read_text(), str(path))
    return normalize(solution) if normalized else solution
