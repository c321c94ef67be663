"""Command-line front end.

Subcommands ``sample``, ``spectrum``, ``cwt``, ``regularity`` and ``verify-all`` write CSV or
JSON artifacts. Exit status is 0 on success, 2 for invalid input and 3 when a resolution,
accuracy or resource guard fails (or an acceptance check does not pass).
"""

# Import built-in modules
import argparse
import json
import logging
from pathlib import Path
import sys
from typing import Any, Dict, List, Literal, Optional, Sequence

# Import third-party modules
import anyio
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, model_validator

# Import local modules
from fif_wavelet import __version__
from fif_wavelet.acceptance import CHECKS, run_acceptance
from fif_wavelet.core import FifAnalyzer
from fif_wavelet.exceptions import (
    AccuracyError,
    ConfigurationError,
    DomainError,
    FifWaveletError,
    NoSuchMethodError,
    PreconditionError,
    ResourceError,
    ValidationError,
)
from fif_wavelet.export import grid_csv, render_json, scalogram_csv, spectrum_csv, write_outputs
from fif_wavelet.fixtures import fixture_names, get_fixture
from fif_wavelet.schema import InterpolationProblem, SpectrumMethodName
from fif_wavelet.utils import AnalysisConfig, dyadic_scales, max_relative_deviation, uniform_translations
from fif_wavelet.wavelets import CauchyWavelet

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_GUARD = 3

Command = Literal["sample", "spectrum", "cwt", "regularity", "verify-all"]


class RunConfig(BaseModel):
    """Complete description of one CLI run; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    problem: Optional[Path] = Field(None, description="Problem definition JSON file")
    fixture: Optional[str] = Field(None, description="Named reference problem instead of a file")
    output: Path = Field(..., description="Output file (CSV or JSON report)")

    level: int = Field(10, ge=0, description="Grid level written by `sample`")
    signal_level: int = Field(16, ge=1, description="Grid level of the sampled signal for quadratures")

    omega_start: float = 0.5
    omega_stop: float = 200.0
    omega_steps: int = Field(64, ge=1)
    omega_scale: Literal["log", "linear"] = "log"
    trunc: int = Field(40, ge=1, description="Series truncation depth")
    spectrum_method: SpectrumMethodName = SpectrumMethodName.SERIES

    scale_min_exp: int = Field(3, description="Coarsest scale 2^-scale_min_exp")
    scale_max_exp: int = Field(10, description="Finest scale 2^-scale_max_exp")
    t_steps: int = Field(9, ge=1)
    wavelet_order: int = Field(4, ge=2)
    wavelet_method: Literal["direct", "fourier", "both"] = "direct"
    conjugate: bool = True

    delta: Optional[float] = Field(None, gt=0.0, le=1.0)
    checks: Optional[List[str]] = Field(None, description="Subset of acceptance checks")
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig.from_env)

    @model_validator(mode="after")
    def check_options(self) -> "RunConfig":
        """Cross-field guards."""
        if (self.problem is None) == (self.fixture is None):
            raise ValueError("exactly one of problem and fixture is required")
        if self.omega_stop < self.omega_start:
            raise ValueError("omega_stop must not be below omega_start")
        if self.omega_scale == "log" and self.omega_start <= 0.0:
            raise ValueError("log frequency spacing needs omega_start > 0")
        if self.scale_max_exp < self.scale_min_exp:
            raise ValueError("scale_max_exp must not be below scale_min_exp")
        if self.checks is not None:
            unknown = sorted(set(self.checks) - {name for name, _ in CHECKS})
            if unknown:
                raise ValueError(f"unknown checks: {', '.join(unknown)}")
        return self

    @property
    def omegas(self) -> np.ndarray:
        """Frequencies of the `spectrum` command."""
        if self.omega_scale == "log":
            return np.geomspace(self.omega_start, self.omega_stop, self.omega_steps)
        return np.linspace(self.omega_start, self.omega_stop, self.omega_steps)

    @property
    def scales(self) -> List[float]:
        """Dyadic scales, coarsest first."""
        return dyadic_scales(self.scale_min_exp, self.scale_max_exp)

    @classmethod
    def from_sources(cls, values: Dict[str, Any], config_file: Optional[Path] = None) -> "RunConfig":
        """Build a run configuration from a JSON file overlaid with explicit values.

        Raises:
            ValidationError: If the file is unreadable, malformed or holds invalid settings
        """
        data: Dict[str, Any] = {}
        if config_file is not None:
            try:
                text = Path(config_file).read_text(encoding="utf-8")
            except OSError as e:
                raise ValidationError(f"Cannot read config file {config_file}: {e.strerror or e}")
            try:
                loaded = json.loads(text)
            except json.JSONDecodeError as e:
                raise ValidationError.from_json_error(e, source=str(config_file))
            if not isinstance(loaded, dict):
                raise ValidationError(f"Config file {config_file} must contain a JSON object")
            data.update(loaded)
        overrides = {k: v for k, v in values.items() if v is not None}
        if isinstance(data.get("analysis"), dict) and isinstance(overrides.get("analysis"), dict):
            overrides["analysis"] = {**data["analysis"], **overrides["analysis"]}
        data.update(overrides)
        try:
            return cls.model_validate(data)
        except PydanticValidationError as e:
            raise ValidationError.from_pydantic(e, source="run configuration")


def load_problem(config: RunConfig) -> InterpolationProblem:
    """Problem named by the run configuration."""
    if config.fixture is not None:
        return get_fixture(config.fixture)
    return InterpolationProblem.from_file(config.problem)  # type: ignore[arg-type]


def _suffixed(path: Path, tag: str) -> Path:
    return path.with_name(f"{path.stem}_{tag}{path.suffix}")


async def _sample(analyzer: FifAnalyzer, config: RunConfig) -> Dict[Path, str]:
    return {config.output: grid_csv(analyzer.sample(config.level))}


async def _spectrum(analyzer: FifAnalyzer, config: RunConfig) -> Dict[Path, str]:
    table = await analyzer.spectrum_async(
        config.omegas.tolist(), config.spectrum_method, J_trunc=config.trunc, level=config.signal_level
    )
    return {config.output: spectrum_csv(table)}


async def _cwt(analyzer: FifAnalyzer, config: RunConfig) -> Dict[Path, str]:
    wavelet = CauchyWavelet(M=config.wavelet_order)
    translations = uniform_translations(config.t_steps)
    methods = ["direct", "fourier"] if config.wavelet_method == "both" else [config.wavelet_method]
    grids = {
        method: await analyzer.scalogram_async(
            config.scales,
            translations,
            method,
            wavelet,
            config.conjugate,
            level=config.signal_level,
            J_trunc=config.trunc,
        )
        for method in methods
    }
    if len(grids) == 1:
        return {config.output: scalogram_csv(grids[methods[0]])}
    deviation = max_relative_deviation(grids["direct"].values, grids["fourier"].values)
    logger.info("Direct vs Fourier relative deviation: %.3g", deviation)
    return {_suffixed(config.output, method): scalogram_csv(grid) for method, grid in grids.items()}


async def _regularity(analyzer: FifAnalyzer, config: RunConfig) -> Dict[Path, str]:
    method = "direct" if config.wavelet_method == "both" else config.wavelet_method
    report = analyzer.regularity(
        config.scales,
        config.delta,
        CauchyWavelet(M=config.wavelet_order),
        method=method,
        conjugate=config.conjugate,
        level=config.signal_level,
        J_trunc=config.trunc,
    )
    provenance = {**report.provenance, "fixture": config.fixture, "problem": str(config.problem or "")}
    return {config.output: render_json(report.model_copy(update={"provenance": provenance}))}


COMMANDS = {"sample": _sample, "spectrum": _spectrum, "cwt": _cwt, "regularity": _regularity}


def run(config: RunConfig) -> int:
    """Execute one CLI run.

    The problem is validated first. Spectra and scalograms are evaluated in worker threads,
    ``analysis.threads`` at a time. Output files are written only when the whole pipeline succeeds.

    Args:
        config: Run configuration

    Returns:
        int: Exit status
    """
    try:
        analyzer = FifAnalyzer(load_problem(config), config.analysis)
        if config.command == "verify-all":
            report = run_acceptance(analyzer.problem, config.analysis, config.checks)
            write_outputs({config.output: render_json(report)})
            for check in report.checks:
                logger.info("%-22s %s %s", check.name, "PASS" if check.passed else "FAIL", check.detail)
            return EXIT_OK if report.passed else EXIT_GUARD
        write_outputs(anyio.run(COMMANDS[config.command], analyzer, config))
        return EXIT_OK
    except (ValidationError, ConfigurationError, PreconditionError, NoSuchMethodError) as e:
        logger.error("%s: %s", type(e).__name__, e.message)
        return EXIT_INVALID
    except (AccuracyError, ResourceError, DomainError) as e:
        logger.error("%s: %s", type(e).__name__, e.message)
        return EXIT_GUARD
    except FifWaveletError as e:
        logger.error("%s: %s", type(e).__name__, e.message)
        return EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per pipeline."""
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--problem", type=Path, help="Problem definition JSON file")
    source.add_argument("--fixture", choices=fixture_names(), help="Named reference problem")
    common.add_argument("--config", type=Path, help="JSON file with run settings; flags override it")
    common.add_argument("-o", "--output", type=Path, help="Output file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    common.add_argument("--threads", type=int, help="Worker threads for batch evaluation")

    parser = argparse.ArgumentParser(prog="fif-wavelet", description="Fractal interpolation functions and wavelets")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sample = sub.add_parser("sample", parents=[common], help="Exact values on an N-adic grid")
    sample.add_argument("--level", type=int)

    spectrum = sub.add_parser("spectrum", parents=[common], help="Fourier transform samples")
    spectrum.add_argument("--omega-start", type=float)
    spectrum.add_argument("--omega-stop", type=float)
    spectrum.add_argument("--omega-steps", type=int)
    spectrum.add_argument("--omega-scale", choices=["log", "linear"])
    spectrum.add_argument("--trunc", type=int)
    spectrum.add_argument("--method", dest="spectrum_method", choices=[m.value for m in SpectrumMethodName])
    spectrum.add_argument("--signal-level", type=int)

    for name, helptext in (("cwt", "Wavelet scalogram"), ("regularity", "Decay constants and exponent fit")):
        cmd = sub.add_parser(name, parents=[common], help=helptext)
        cmd.add_argument("--scale-min-exp", type=int)
        cmd.add_argument("--scale-max-exp", type=int)
        cmd.add_argument("--wavelet-order", type=int)
        cmd.add_argument("--method", dest="wavelet_method", choices=["direct", "fourier", "both"])
        cmd.add_argument("--conjugate", choices=["on", "off"])
        cmd.add_argument("--signal-level", type=int)
        cmd.add_argument("--trunc", type=int)
        if name == "cwt":
            cmd.add_argument("--t-steps", type=int)
        else:
            cmd.add_argument("--delta", type=float)
            cmd.add_argument("--report", dest="output", type=Path, help="Report JSON file")

    verify = sub.add_parser("verify-all", parents=[common], help="Run the acceptance suite")
    verify.add_argument("--check", dest="checks", action="append", choices=[name for name, _ in CHECKS])
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Translate parsed arguments into a :class:`RunConfig`."""
    values = {k: v for k, v in vars(args).items() if k not in {"config", "verbose", "threads"}}
    if values.get("conjugate") is not None:
        values["conjugate"] = values["conjugate"] == "on"
    if args.threads is not None:
        values["analysis"] = {"threads": args.threads}
    return RunConfig.from_sources(values, args.config)


def configure_logging(verbosity: int) -> None:
    """Log to stderr at WARNING, INFO (-v) or DEBUG (-vv)."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
    except FifWaveletError as e:
        logger.error("%s: %s", type(e).__name__, e.message)
        return EXIT_INVALID
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
