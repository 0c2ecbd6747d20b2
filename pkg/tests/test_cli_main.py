"""Tests for the helion command line."""

import logging

import pandas as pd
import pytest

from helion import Client
from helion.cli import EXIT_CONFIG, EXIT_OK, EXIT_PIPELINE, EXIT_SOLVER, format_artifact, read_artifact, run
from helion.cli.main import build_parser, main
from helion.errors import NotPositiveDefinite
from helion.numerics.precision import ENV_DIGITS


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Run every test without a precision override in the environment."""
    monkeypatch.delenv(ENV_DIGITS, raising=False)


@pytest.fixture(scope="module")
def artifact(tmp_path_factory):
    """A fixed-exponent omega=1 ground-state artifact written by `helion solve`."""
    path = tmp_path_factory.mktemp("artifacts") / "1s1s-singlet.state"
    code = run(["solve", "--state", "1s1s", "--omega", "1", "--alpha", "1.7", "--beta", "1.7", "--output", str(path)])
    assert code == EXIT_OK
    return path


class TestParser:
    """Tests for argument parsing."""

    def test_subcommand_should_be_required(self):
        """Test that running without a subcommand exits with a usage error."""
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args([])
        assert exc.value.code == 2

    def test_unset_flags_should_be_none(self):
        """Test that flags left out parse to None so lower layers apply."""
        args = build_parser().parse_args(["entropy"])
        assert args.la_max is None and args.digits is None and args.tune_scale is None

    def test_verbose_and_quiet_should_be_exclusive(self):
        """Test that --verbose and --quiet cannot be combined."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["--verbose", "--quiet", "solve"])

    def test_main_should_exit_with_run_code(self):
        """Test that main() exits with the code returned by run()."""
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--state", "1s0s"])
        assert exc.value.code == EXIT_CONFIG


class TestSolveCommand:
    """Tests for `helion solve`."""

    def test_invalid_state_should_exit_config(self):
        """Test that an invalid label exits with code 2."""
        assert run(["solve", "--state", "1s0s"]) == EXIT_CONFIG

    def test_triplet_ground_should_exit_config(self):
        """Test that 1s1s triplet exits with code 2."""
        assert run(["solve", "--state", "1s1s", "--spin", "triplet"]) == EXIT_CONFIG

    def test_lone_exponent_should_exit_config(self):
        """Test that --alpha without --beta exits with code 2."""
        assert run(["solve", "--alpha", "1.7"]) == EXIT_CONFIG

    def test_artifact_should_hold_header_and_terms(self, artifact):
        """Test that the artifact header records the run and lists every term."""
        text = artifact.read_text()
        assert text.startswith("# helion ")
        assert "state = 1s1s" in text and "omega = 1" in text and "terms = 3" in text
        assert "k m n coefficient" in text

    def test_artifact_should_reformat_identically(self, artifact):
        """Test that re-reading an artifact reproduces its text."""
        assert format_artifact(read_artifact(artifact, normalized=False)) == artifact.read_text()

    def test_artifact_energy_should_match_fresh_solve(self, artifact):
        """Test that the stored energy matches a direct solve with the same exponents."""
        solution = Client().solve("1s1s", "singlet", omega=1, alpha=1.7, beta=1.7)
        stored = read_artifact(artifact)
        assert abs(float(stored.energy) - float(solution.energy)) < 1e-14

    def test_solver_failure_should_exit_solver(self, mocker, tmp_path):
        """Test that a solver failure exits with code 3 and writes nothing."""
        mocker.patch("helion.client.solve_state", side_effect=NotPositiveDefinite("overlap is not positive definite"))
        out = tmp_path / "x.state"
        assert run(["solve", "--omega", "1", "--alpha", "2", "--beta", "2", "--output", str(out)]) == EXIT_SOLVER
        assert not out.exists()

    @pytest.mark.parametrize("argv", [
        ["--state", "1s6s", "--spin", "triplet", "--omega", "2"],
        ["--state", "1s2s", "--spin", "triplet", "--omega", "0"],
    ])
    def test_basis_too_small_for_root_should_exit_config(self, argv, tmp_path, caplog):
        """Test that a root beyond the basis size is a configuration error, not a crash."""
        out = tmp_path / "x.state"
        with caplog.at_level(logging.ERROR):
            assert run(["solve", *argv, "--output", str(out)]) == EXIT_CONFIG
        assert "raise omega" in caplog.text
        assert not out.exists()

    def test_invalid_solve_request_should_exit_config(self, mocker, tmp_path):
        """Test that a plain ValueError from the solver maps to the configuration exit code."""
        mocker.patch("helion.client.solve_state", side_effect=ValueError("root_index must lie in [1, 3] for this basis, got 5"))
        out = tmp_path / "x.state"
        assert run(["solve", "--omega", "1", "--alpha", "2", "--beta", "2", "--output", str(out)]) == EXIT_CONFIG
        assert not out.exists()


class TestEntropyCommand:
    """Tests for `helion entropy`."""

    def test_missing_artifact_should_exit_pipeline(self, tmp_path, caplog):
        """Test that a missing artifact exits with code 4 and names the file."""
        with caplog.at_level(logging.ERROR):
            code = run(["entropy", "--artifact", str(tmp_path / "absent.state")])
        assert code == EXIT_PIPELINE
        assert "artifact not found" in caplog.text

    def test_corrupt_artifact_should_exit_pipeline(self, tmp_path):
        """Test that an artifact without a term table exits with code 4."""
        path = tmp_path / "bad.state"
        path.write_text("state = 1s1s\n")
        assert run(["entropy", "--artifact", str(path)]) == EXIT_PIPELINE

    def test_report_should_carry_metadata_and_summary(self, artifact, tmp_path):
        """Test that the report starts with metadata lines and lists the entropies."""
        out = tmp_path / "report.csv"
        code = run(["entropy", "--artifact", str(artifact), "--l-max", "1", "--la-max", "6", "--output", str(out)])
        assert code == EXIT_OK
        text = out.read_text()
        assert text.startswith("# helion ")
        assert "# command=entropy" in text
        assert "s_von_neumann" in text and "epsilon_linear" in text


class TestScanCommand:
    """Tests for `helion scan`."""

    def test_descending_values_should_exit_config(self):
        """Test that non-ascending scan values exit with code 2."""
        assert run(["scan", "--axis", "la_max", "--values", "10", "5"]) == EXIT_CONFIG

    def test_unknown_axis_should_be_rejected(self):
        """Test that an axis outside the supported ones is a usage error."""
        with pytest.raises(SystemExit):
            run(["scan", "--axis", "Z", "--values", "1"])

    def test_omega_scan_should_write_one_row_per_value(self, tmp_path):
        """Test that an omega scan writes a table with basis sizes per omega."""
        out = tmp_path / "scan.csv"
        code = run([
            "scan", "--axis", "omega", "--values", "0", "1",
            "--alpha", "1.7", "--beta", "1.7", "--l-max", "1", "--la-max", "6", "--output", str(out),
        ])
        assert code == EXIT_OK
        df = pd.read_csv(out, comment="#")
        assert list(df["omega"]) == [0, 1]
        assert list(df["terms"]) == [1, 3]
        assert (df["energy"] < -2.7).all()

    def test_tsv_format_should_use_tabs(self, artifact, tmp_path):
        """Test that --format tsv writes tab-separated tables."""
        out = tmp_path / "scan.tsv"
        code = run(["scan", "--axis", "la_max", "--values", "4", "6", "--l-max", "0", "--artifact", str(artifact), "--format", "tsv", "--output", str(out)])
        assert code == EXIT_OK
        df = pd.read_csv(out, comment="#", sep="\t")
        assert list(df["la_max"]) == [4, 6]


class TestFigureCommand:
    """Tests for `helion figure`."""

    def test_empty_state_list_should_exit_config(self):
        """Test that an explicit empty --states exits with code 2."""
        assert run(["figure", "--states"]) == EXIT_CONFIG

    def test_malformed_entry_should_exit_config(self):
        """Test that a state entry without a spin exits with code 2."""
        assert run(["figure", "--states", "1s2s"]) == EXIT_CONFIG

    def test_missing_artifacts_should_exit_pipeline(self, tmp_path, caplog):
        """Test that absent artifacts exit with code 4 and are listed."""
        with caplog.at_level(logging.ERROR):
            code = run(["figure", "--states", "1s2s:triplet", "1s3s:singlet", "--artifacts-dir", str(tmp_path)])
        assert code == EXIT_PIPELINE
        assert "1s2s triplet" in caplog.text and "1s3s singlet" in caplog.text

    def test_single_state_should_write_dataset(self, artifact, tmp_path):
        """Test that one available artifact yields a one-row dataset."""
        out = tmp_path / "figure.csv"
        code = run(["figure", "--states", "1s1s:singlet", "--artifacts-dir", str(artifact.parent), "--l-max", "1", "--la-max", "6", "--output", str(out)])
        assert code == EXIT_OK
        df = pd.read_csv(out, comment="#")
        assert len(df) == 1
        assert df.loc[0, "spin"] == "singlet"
        assert df.loc[0, "epsilon_von_neumann"] > 0
