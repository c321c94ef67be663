"""Tests for the command-line front end."""

# Import built-in modules
import json
from pathlib import Path
from typing import Any, Dict, List

# Import third-party modules
import pytest

# Import local modules
from fif_wavelet.cli import EXIT_GUARD
from fif_wavelet.cli import EXIT_INVALID
from fif_wavelet.cli import EXIT_OK
from fif_wavelet.cli import RunConfig
from fif_wavelet.cli import build_parser
from fif_wavelet.cli import config_from_args
from fif_wavelet.cli import main
from fif_wavelet.exceptions import ValidationError


def test_sample(problem_file: Path, tmp_path: Path) -> None:
    """Test the sample command on a problem file."""
    output = tmp_path / "grid.csv"
    assert main(["sample", "--problem", str(problem_file), "--level", "10", "-o", str(output)]) == EXIT_OK
    lines = output.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,f"
    assert len(lines) == 1026
    assert lines[1] == "0,0"
    assert lines[513] == "0.5,1"
    assert lines[-1] == "1,0"


def test_sample_missing_problem(tmp_path: Path) -> None:
    """Test that an unreadable problem file is invalid input and writes nothing."""
    output = tmp_path / "grid.csv"
    assert main(["sample", "--problem", str(tmp_path / "missing.json"), "-o", str(output)]) == EXIT_INVALID
    assert not output.exists()


def test_sample_budget(tmp_path: Path) -> None:
    """Test that an oversized grid is a resource failure."""
    output = tmp_path / "grid.csv"
    assert main(["sample", "--fixture", "tent", "--level", "30", "-o", str(output)]) == EXIT_GUARD
    assert not output.exists()


def test_missing_output(problem_file: Path) -> None:
    """Test that the output path is required."""
    assert main(["sample", "--problem", str(problem_file)]) == EXIT_INVALID


def test_spectrum(tmp_path: Path) -> None:
    """Test the spectrum command with linear spacing."""
    output = tmp_path / "spectrum.csv"
    argv = ["spectrum", "--fixture", "tent", "--omega-start", "0", "--omega-stop", "10", "--omega-steps", "11"]
    assert main([*argv, "--omega-scale", "linear", "-o", str(output)]) == EXIT_OK
    lines = output.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "omega,re,im,abs,tail_bound"
    assert len(lines) == 12
    assert float(lines[2].split(",")[0]) == 1.0


def test_spectrum_resolution_guard(tmp_path: Path) -> None:
    """Test that quadrature on a coarse grid fails its guard."""
    output = tmp_path / "spectrum.csv"
    argv = ["spectrum", "--fixture", "tent", "--method", "quad", "--signal-level", "3", "-o", str(output)]
    assert main(argv) == EXIT_GUARD
    assert not output.exists()


def test_spectrum_linear_rejects_curved_pieces(tmp_path: Path) -> None:
    """Test the linear method on cubic pieces."""
    argv = ["spectrum", "--fixture", "smoothstep", "--method", "linear", "-o", str(tmp_path / "s.csv")]
    assert main(argv) == EXIT_GUARD


def test_cwt_both(tmp_path: Path) -> None:
    """Test that both methods write suffixed files."""
    output = tmp_path / "scalogram.csv"
    argv = ["cwt", "--fixture", "tent", "--scale-min-exp", "3", "--scale-max-exp", "5", "--t-steps", "3"]
    assert main([*argv, "--method", "both", "-o", str(output)]) == EXIT_OK
    assert not output.exists()
    for tag in ("direct", "fourier"):
        lines = (tmp_path / f"scalogram_{tag}.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "s,t,re,im,abs"
        assert len(lines) == 1 + 3 * 3


def test_cwt_scale_guard(tmp_path: Path) -> None:
    """Test that scales below the grid resolution fail the guard."""
    output = tmp_path / "scalogram.csv"
    argv = ["cwt", "--fixture", "tent", "--signal-level", "8", "--scale-max-exp", "9", "-o", str(output)]
    assert main(argv) == EXIT_GUARD
    assert not output.exists()


def test_regularity(tmp_path: Path) -> None:
    """Test the regularity report of the gamma = 0.2 tent."""
    report = tmp_path / "report.json"
    argv = ["regularity", "--fixture", "tent-0.2", "--scale-max-exp", "7", "--signal-level", "12"]
    assert main([*argv, "--report", str(report)]) == EXIT_OK
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["lip_bound_ok"] is True
    assert data["bound_C"] == pytest.approx(20.0)
    assert data["provenance"]["fixture"] == "tent-0.2"


def test_regularity_outside_hypothesis(tmp_path: Path) -> None:
    """Test that a failed hypothesis is reported, not an error."""
    report = tmp_path / "report.json"
    argv = ["regularity", "--fixture", "tent", "--scale-max-exp", "6", "--signal-level", "12"]
    assert main([*argv, "--report", str(report)]) == EXIT_OK
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["bound_C"] is None
    assert data["lip_bound_ok"] is None


def test_verify_all_subset(tmp_path: Path) -> None:
    """Test a quick subset of the acceptance suite."""
    output = tmp_path / "verify.json"
    argv = ["verify-all", "--fixture", "tent", "--check", "split_integral", "--check", "factorization"]
    assert main([*argv, "-o", str(output)]) == EXIT_OK
    data = json.loads(output.read_text(encoding="utf-8"))
    assert data["passed"] is True
    assert [c["name"] for c in data["checks"]] == ["factorization", "split_integral"]


def test_verify_all_is_repeatable(tmp_path: Path) -> None:
    """Test that identical runs write byte-identical reports."""
    argv = ["verify-all", "--fixture", "tent", "--check", "split_integral", "--check", "factorization"]
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert main([*argv, "-o", str(first)]) == EXIT_OK
    assert main([*argv, "-o", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_verify_all_invalid_problem(tmp_path: Path, tent_data: Dict[str, Any]) -> None:
    """Test that verify-all rejects a problem violating |gamma_k| < 1."""
    problem_file = tmp_path / "expanding.json"
    problem_file.write_text(json.dumps({**tent_data, "gamma": [1.0, 0.3]}), encoding="utf-8")
    output = tmp_path / "verify.json"
    argv = ["verify-all", "--problem", str(problem_file), "--check", "functional_equation"]
    assert main([*argv, "-o", str(output)]) == EXIT_INVALID
    assert not output.exists()


def test_config_file(tmp_path: Path) -> None:
    """Test that flags override the configuration file."""
    config_file = tmp_path / "run.json"
    config_file.write_text(json.dumps({"fixture": "takagi", "level": 3, "analysis": {"threads": 2}}))
    args = build_parser().parse_args(["sample", "--config", str(config_file), "--level", "5", "-o", "x.csv"])
    config = config_from_args(args)
    assert config.fixture == "takagi"
    assert config.level == 5
    assert config.analysis.threads == 2


def test_config_file_unknown_key(tmp_path: Path) -> None:
    """Test that unknown configuration keys are invalid input."""
    config_file = tmp_path / "run.json"
    config_file.write_text(json.dumps({"fixture": "tent", "colour": "red"}))
    output = tmp_path / "grid.csv"
    assert main(["sample", "--config", str(config_file), "-o", str(output)]) == EXIT_INVALID
    assert not output.exists()


def test_threads_flag() -> None:
    """Test that --threads reaches the analysis configuration."""
    args = build_parser().parse_args(["spectrum", "--fixture", "tent", "--threads", "3", "-o", "s.csv"])
    assert config_from_args(args).analysis.threads == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--fixture", "tent", "--omega-stop", "50", "--omega-steps", "600"],
        ["cwt", "--fixture", "tent", "--scale-max-exp", "6", "--method", "both"],
    ],
)
def test_threaded_output_matches_sequential(tmp_path: Path, argv: List[str]) -> None:
    """Test that worker threads do not change the written files."""
    threaded, sequential = tmp_path / "threaded" / "out.csv", tmp_path / "sequential" / "out.csv"
    threaded.parent.mkdir()
    sequential.parent.mkdir()
    assert main([*argv, "--threads", "4", "-o", str(threaded)]) == EXIT_OK
    assert main([*argv, "--threads", "1", "-o", str(sequential)]) == EXIT_OK
    for name in sorted(p.name for p in sequential.parent.iterdir()):
        assert (threaded.parent / name).read_bytes() == (sequential.parent / name).read_bytes()


@pytest.mark.parametrize(
    "values",
    [
        {"command": "sample", "output": "x.csv"},
        {"command": "sample", "output": "x.csv", "fixture": "tent", "problem": "p.json"},
        {"command": "spectrum", "output": "x.csv", "fixture": "tent", "omega_start": 0.0},
        {"command": "cwt", "output": "x.csv", "fixture": "tent", "scale_min_exp": 5, "scale_max_exp": 4},
        {"command": "verify-all", "output": "x.json", "fixture": "tent", "checks": ["everything"]},
    ],
)
def test_run_config_guards(values: dict) -> None:
    """Test the cross-field checks of the run configuration."""
    with pytest.raises(ValidationError):
        RunConfig.from_sources(values)


def test_parser_rejects_unknown_fixture() -> None:
    """Test that argparse refuses unknown fixture names."""
    with pytest.raises(SystemExit):
        build_parser().parse_args(["sample", "--fixture", "weierstrass", "-o", "x.csv"])
