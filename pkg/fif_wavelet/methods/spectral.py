"""Fourier-transform methods.

This module provides the series, brute-force, linear closed-form and quadrature evaluations
of f^(omega).
"""

# Import built-in modules
import logging
from typing import Tuple

# Import third-party modules
import numpy as np

# Import local modules
from fif_wavelet.components import BaseSpectrumMethod
from fif_wavelet.schema import SpectrumMethodName
from fif_wavelet.spectrum import ft_quadrature, ft_quadrature_error

logger = logging.getLogger(__name__)


class SeriesMethod(BaseSpectrumMethod):
    """Factorised series with its geometric tail certificate."""

    name = SpectrumMethodName.SERIES.value

    def prepare(self) -> None:
        # Worker threads share the fallback grid.
        _ = self.evaluator.reference_grid

    def evaluate(self, omegas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        values, bounds = self.evaluator.ft_series(np.asarray(omegas, dtype=float))
        return np.asarray(values), np.asarray(bounds)


class BruteForceMethod(BaseSpectrumMethod):
    """Literal enumeration of the nested sums, depth ``J_trunc`` (at most 6)."""

    name = SpectrumMethodName.BRUTE.value

    def evaluate(self, omegas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        omegas = np.asarray(omegas, dtype=float)
        values = self.evaluator.ft_series_bruteforce(omegas, self._J_trunc)
        return np.asarray(values), np.full(omegas.shape, self.evaluator.tail_bound(self._J_trunc))


class LinearMethod(BaseSpectrumMethod):
    """Closed form for piecewise-linear q_k."""

    name = SpectrumMethodName.LINEAR.value

    def prepare(self) -> None:
        # Fails fast on non-linear pieces.
        self.evaluator.slopes()
        _ = self.evaluator.reference_grid

    def evaluate(self, omegas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        omegas = np.asarray(omegas, dtype=float)
        values = self.evaluator.ft_linear(omegas)
        return np.asarray(values), np.full(omegas.shape, self.evaluator.tail_bound())


class QuadratureMethod(BaseSpectrumMethod):
    """Composite Simpson quadrature on the sampled signal."""

    name = SpectrumMethodName.QUAD.value

    def prepare(self) -> None:
        _ = self.grid

    def evaluate(self, omegas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        omegas = np.asarray(omegas, dtype=float)
        values = np.asarray(ft_quadrature(self.grid, omegas))
        errors = np.array([ft_quadrature_error(self.grid, float(w)) for w in omegas])
        logger.debug("[%s] %d frequencies on the level-%d grid", self.name, omegas.size, self.grid.level)
        return values, errors
