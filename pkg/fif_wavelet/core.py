"""Core module for fif-wavelet.

This module provides the main entry point for sampling, spectra, scalograms and regularity
reports of one interpolation problem.
"""

# Import built-in modules
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union, cast

# Import local modules
from fif_wavelet.components import BaseSpectrumMethod, BaseWaveletMethod
from fif_wavelet.exceptions import ConfigurationError, ValidationError
from fif_wavelet.factory import MethodFactory
from fif_wavelet.fif import evaluate_point, sample_grid, validate
from fif_wavelet.regularity import build_report
from fif_wavelet.schema import (
    FifGrid,
    InterpolationProblem,
    RegularityReport,
    ScalogramGrid,
    SpectrumMethodName,
    SpectrumTable,
    TransformKind,
    ValidationReport,
    WaveletMethodName,
)
from fif_wavelet.utils import AnalysisConfig, uniform_translations
from fif_wavelet.wavelets import CauchyWavelet

logger = logging.getLogger(__name__)

MethodName = Union[str, SpectrumMethodName, WaveletMethodName]


class FifAnalyzer:
    """Main class for analysing one fractal interpolation function.

    Args:
        problem: Interpolation problem
        config: Analysis configuration

    Raises:
        ValidationError: If the problem violates its constraints
        ConfigurationError: If config is not an AnalysisConfig
    """

    def __init__(self, problem: InterpolationProblem, config: Optional[AnalysisConfig] = None) -> None:
        if config is None:
            self._config = AnalysisConfig.from_env()
        elif isinstance(config, AnalysisConfig):
            self._config = config
        else:
            raise ConfigurationError("Invalid configuration. Expected AnalysisConfig or None.", config_value=config)
        self._validation = validate(problem)
        if not self._validation.ok:
            errors = {f"{v.constraint}[{v.index}]": v.magnitude for v in self._validation.violations}
            raise ValidationError(
                f"Problem violates: {', '.join(self._validation.constraints())}", errors=errors
            )
        self._problem = problem
        self._factory = MethodFactory()

    @property
    def problem(self) -> InterpolationProblem:
        """The analysed problem."""
        return self._problem

    @property
    def config(self) -> AnalysisConfig:
        """Analysis configuration."""
        return self._config

    @property
    def validation(self) -> ValidationReport:
        """Validation report of the problem."""
        return self._validation

    @property
    def methods(self) -> List[str]:
        """Names of all registered transform methods."""
        return sorted(self._factory.get_method_names())

    def register_method(self, name: str, method_class: Any) -> None:
        """Register an additional transform method class."""
        self._factory.register_method(name, method_class)

    def sample(self, level: int) -> FifGrid:
        """Exact values on the level-``level`` grid."""
        return sample_grid(self._problem, level, self._config)

    def evaluate(self, x: float, depth: int = 30) -> Tuple[float, float]:
        """Value at a single point with its certified error bound."""
        return evaluate_point(self._problem, x, depth)

    def spectrum_method(self, method: MethodName = SpectrumMethodName.SERIES, **kwargs: Any) -> BaseSpectrumMethod:
        """Create a spectrum method bound to this problem."""
        name = method.value if isinstance(method, SpectrumMethodName) else str(method)
        instance = self._factory.create_method(name, self._problem, self._config, TransformKind.SPECTRUM, **kwargs)
        return cast(BaseSpectrumMethod, instance)

    def wavelet_method(
        self,
        method: MethodName = WaveletMethodName.DIRECT,
        wavelet: Optional[CauchyWavelet] = None,
        conjugate: bool = True,
        **kwargs: Any,
    ) -> BaseWaveletMethod:
        """Create a wavelet method bound to this problem."""
        name = method.value if isinstance(method, WaveletMethodName) else str(method)
        instance = self._factory.create_method(
            name, self._problem, self._config, TransformKind.WAVELET, wavelet=wavelet, conjugate=conjugate, **kwargs
        )
        return cast(BaseWaveletMethod, instance)

    def spectrum(
        self, omegas: Sequence[float], method: MethodName = SpectrumMethodName.SERIES, **kwargs: Any
    ) -> SpectrumTable:
        """Fourier transform samples.

        Args:
            omegas: Frequencies
            method: ``series``, ``brute``, ``linear`` or ``quad``
            **kwargs: Method options (J_trunc, omega_min, level)

        Returns:
            SpectrumTable: Values and error bounds
        """
        return self.spectrum_method(method, **kwargs).spectrum(omegas)

    async def spectrum_async(
        self, omegas: Sequence[float], method: MethodName = SpectrumMethodName.SERIES, **kwargs: Any
    ) -> SpectrumTable:
        """Fourier transform samples computed in worker threads."""
        return await self.spectrum_method(method, **kwargs).spectrum_async(omegas)

    def scalogram(
        self,
        scales: Sequence[float],
        translations: Sequence[float],
        method: MethodName = WaveletMethodName.DIRECT,
        wavelet: Optional[CauchyWavelet] = None,
        conjugate: bool = True,
        **kwargs: Any,
    ) -> ScalogramGrid:
        """Wavelet transform over scales x translations.

        Args:
            scales: Strictly decreasing positive scales
            translations: Translations
            method: ``direct`` or ``fourier``
            wavelet: Analysing wavelet, order 4 by default
            conjugate: Conjugated (default) or unconjugated transform
            **kwargs: Method options (level, J_trunc, omega_min)

        Returns:
            ScalogramGrid: The scalogram
        """
        return self.wavelet_method(method, wavelet, conjugate, **kwargs).scalogram(scales, translations)

    async def scalogram_async(
        self,
        scales: Sequence[float],
        translations: Sequence[float],
        method: MethodName = WaveletMethodName.DIRECT,
        wavelet: Optional[CauchyWavelet] = None,
        conjugate: bool = True,
        **kwargs: Any,
    ) -> ScalogramGrid:
        """Wavelet transform computed with one worker-thread job per scale."""
        return await self.wavelet_method(method, wavelet, conjugate, **kwargs).scalogram_async(scales, translations)

    def regularity(
        self,
        scales: Sequence[float],
        delta: Optional[float] = None,
        wavelet: Optional[CauchyWavelet] = None,
        translations: Optional[Sequence[float]] = None,
        method: MethodName = WaveletMethodName.DIRECT,
        **kwargs: Any,
    ) -> RegularityReport:
        """Decay constants, bound check and fitted exponent from a scalogram.

        Args:
            scales: Strictly decreasing positive scales
            delta: Lipschitz order, defaults to the problem's
            wavelet: Analysing wavelet, order 4 by default
            translations: Translations, ``translation_points`` uniform points in [0, 1] by default
            method: Wavelet method used for the scalogram
            **kwargs: Method options

        Returns:
            RegularityReport: Complete report
        """
        if translations is None:
            translations = uniform_translations(self._config.translation_points)
        scalogram = self.scalogram(scales, translations, method, wavelet, **kwargs)
        report = build_report(self._problem, scalogram, delta, self._config)
        logger.info(
            "Regularity: slope=%s bound_finite=%s lip_bound_ok=%s",
            report.fitted_exponent,
            report.bound_finite,
            report.lip_bound_ok,
        )
        return report

    def summary(self) -> Dict[str, Any]:
        """Short description used in report provenance."""
        return {
            "problem_sha256": self._problem.digest(),
            "N": self._problem.N,
            "max_degree": self._problem.max_degree,
            "gamma_max": self._problem.gamma_max,
        }
