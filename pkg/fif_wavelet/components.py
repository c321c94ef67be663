"""Core components for fif-wavelet.

This module contains the base transform-method classes shared by the spectrum and wavelet
method plugins.
"""

# Import built-in modules
from abc import ABC, abstractmethod
from functools import cached_property
import logging
from typing import Any, Callable, ClassVar, List, Optional, Sequence, Tuple, TypeVar

# Import third-party modules
import anyio
from anyio import to_thread
import numpy as np

# Import local modules
from fif_wavelet.fif import sample_grid
from fif_wavelet.schema import FifGrid, InterpolationProblem, ScalogramGrid, SpectrumTable, TransformKind
from fif_wavelet.spectrum import SpectrumEvaluator
from fif_wavelet.utils import AnalysisConfig
from fif_wavelet.wavelets import CauchyWavelet

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

SPECTRUM_CHUNK = 256


class AbstractTransform(ABC):
    """Abstract base class for all transform methods."""

    name: str = ""
    kind: ClassVar[TransformKind]

    @abstractmethod
    def __init__(self, problem: InterpolationProblem, config: Optional[AnalysisConfig] = None, **kwargs: Any) -> None:
        """Initialize the method.

        Args:
            problem: Interpolation problem whose FIF is transformed
            config: Analysis configuration
            **kwargs: Method options
        """

    @abstractmethod
    def prepare(self) -> None:
        """Build the sampled grid or evaluator the method needs."""


class BaseTransform(AbstractTransform):
    """Common state and thread offloading for transform methods.

    Args:
        problem: Interpolation problem
        config: Analysis configuration
        level: Grid level of the sampled signal
        J_trunc: Series truncation depth
        omega_min: Small-frequency cutoff of the series
    """

    def __init__(
        self,
        problem: InterpolationProblem,
        config: Optional[AnalysisConfig] = None,
        level: int = 16,
        J_trunc: int = 40,
        omega_min: float = 1e-6,
        **kwargs: Any,
    ) -> None:
        self._problem = problem
        self._config = config or AnalysisConfig()
        self._level = level
        self._J_trunc = J_trunc
        self._omega_min = omega_min

    @property
    def problem(self) -> InterpolationProblem:
        """The transformed problem."""
        return self._problem

    @property
    def config(self) -> AnalysisConfig:
        """Analysis configuration."""
        return self._config

    @cached_property
    def grid(self) -> FifGrid:
        """Sampled signal at the configured level."""
        logger.debug("[%s] Sampling level-%d grid", self.name, self._level)
        return sample_grid(self._problem, self._level, self._config)

    @cached_property
    def evaluator(self) -> SpectrumEvaluator:
        """Series evaluator of the signal's Fourier transform."""
        return SpectrumEvaluator(self._problem, J_trunc=self._J_trunc, omega_min=self._omega_min, config=self._config)

    def prepare(self) -> None:
        """Build the sampled grid or evaluator the method needs."""

    async def _map_threads(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """Run ``func`` over ``items`` in worker threads, keeping the input order.

        The first failure is re-raised as is once all workers have finished.
        """
        limiter = anyio.CapacityLimiter(self._config.threads)
        results: List[Any] = [None] * len(items)
        errors: List[BaseException] = []

        async def worker(index: int, item: T) -> None:
            try:
                results[index] = await to_thread.run_sync(func, item, limiter=limiter)
            except Exception as e:
                errors.append(e)

        async with anyio.create_task_group() as tg:
            for index, item in enumerate(items):
                tg.start_soon(worker, index, item)
        if errors:
            raise errors[0]
        return results


class BaseSpectrumMethod(BaseTransform):
    """Base implementation of Fourier-transform methods.

    Frequencies are processed in fixed chunks so sequential and threaded evaluation
    produce identical tables.
    """

    kind = TransformKind.SPECTRUM

    @abstractmethod
    def evaluate(self, omegas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Evaluate f^ and its error bound.

        Args:
            omegas: Frequencies

        Returns:
            Tuple[np.ndarray, np.ndarray]: (complex values, error bounds)
        """

    def _chunks(self, omegas: Sequence[float]) -> List[np.ndarray]:
        array = np.asarray(omegas, dtype=float)
        return [array[i : i + SPECTRUM_CHUNK] for i in range(0, array.size, SPECTRUM_CHUNK)]

    def _table(self, omegas: Sequence[float], parts: List[Tuple[np.ndarray, np.ndarray]]) -> SpectrumTable:
        values = np.concatenate([p[0] for p in parts]) if parts else np.empty(0, dtype=complex)
        bounds = np.concatenate([p[1] for p in parts]) if parts else np.empty(0, dtype=float)
        return SpectrumTable(
            method=self.name, omegas=np.asarray(omegas, dtype=float), values=values, tail_bounds=bounds
        )

    def spectrum(self, omegas: Sequence[float]) -> SpectrumTable:
        """Evaluate the spectrum sequentially.

        Args:
            omegas: Frequencies

        Returns:
            SpectrumTable: Values and error bounds
        """
        self.prepare()
        logger.debug("[%s] Evaluating %d frequencies", self.name, len(omegas))
        return self._table(omegas, [self.evaluate(chunk) for chunk in self._chunks(omegas)])

    async def spectrum_async(self, omegas: Sequence[float]) -> SpectrumTable:
        """Evaluate the spectrum with chunks offloaded to worker threads.

        Args:
            omegas: Frequencies

        Returns:
            SpectrumTable: Same table as :meth:`spectrum`
        """
        self.prepare()
        logger.debug("[%s] Evaluating %d frequencies on %d thread(s)", self.name, len(omegas), self._config.threads)
        return self._table(omegas, await self._map_threads(self.evaluate, self._chunks(omegas)))


class BaseWaveletMethod(BaseTransform):
    """Base implementation of continuous wavelet transform methods.

    Args:
        problem: Interpolation problem
        config: Analysis configuration
        wavelet: Analysing wavelet, order 4 by default
        conjugate: Conjugated (default) or unconjugated transform
        **kwargs: Grid level and series options, see :class:`BaseTransform`
    """

    kind = TransformKind.WAVELET

    def __init__(
        self,
        problem: InterpolationProblem,
        config: Optional[AnalysisConfig] = None,
        wavelet: Optional[CauchyWavelet] = None,
        conjugate: bool = True,
        **kwargs: Any,
    ) -> None:
        super().__init__(problem, config, **kwargs)
        self._wavelet = wavelet or CauchyWavelet()
        self._conjugate = conjugate

    @property
    def wavelet(self) -> CauchyWavelet:
        """Analysing wavelet."""
        return self._wavelet

    @abstractmethod
    def row(self, s: float, translations: Sequence[float]) -> np.ndarray:
        """Transform values at one scale.

        Args:
            s: Scale
            translations: Translations

        Returns:
            np.ndarray: Complex values, one per translation
        """

    def _grid(self, scales: Sequence[float], translations: Sequence[float], rows: List[np.ndarray]) -> ScalogramGrid:
        values = np.vstack(rows) if rows else np.zeros((0, len(translations)), dtype=complex)
        return ScalogramGrid(
            scales=list(scales),
            translations=list(translations),
            values=values,
            method=self.name,
            wavelet_order=self._wavelet.M,
            conjugate=self._conjugate,
            signal_level=self.signal_level,
        )

    @property
    def signal_level(self) -> Optional[int]:
        """Level of the sampled signal, None when the method works from the spectrum."""
        return None

    def scalogram(self, scales: Sequence[float], translations: Sequence[float]) -> ScalogramGrid:
        """Evaluate the transform over scales x translations sequentially.

        Args:
            scales: Strictly decreasing positive scales
            translations: Translations

        Returns:
            ScalogramGrid: The scalogram
        """
        self.prepare()
        logger.debug("[%s] Scalogram %d x %d", self.name, len(scales), len(translations))
        return self._grid(scales, translations, [self.row(s, translations) for s in scales])

    async def scalogram_async(self, scales: Sequence[float], translations: Sequence[float]) -> ScalogramGrid:
        """Evaluate the transform with one worker-thread job per scale.

        Args:
            scales: Strictly decreasing positive scales
            translations: Translations

        Returns:
            ScalogramGrid: Same grid as :meth:`scalogram`
        """
        self.prepare()
        rows = await self._map_threads(lambda s: self.row(s, translations), list(scales))
        return self._grid(scales, translations, rows)
