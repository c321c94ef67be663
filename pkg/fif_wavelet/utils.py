"""Utility functions and classes for fif-wavelet.

This module provides the analysis configuration and small numeric helpers shared by the
sampling, spectrum and wavelet modules.
"""

# Import built-in modules
import math
import os
from typing import List, Sequence, Union

# Import third-party modules
import numpy as np
from numpy.polynomial import polynomial as npoly
from pydantic import BaseModel, ConfigDict, field_validator

THREADS_ENV_VAR = "FIF_WAVELET_THREADS"

ArrayLike = Union[float, Sequence[float], np.ndarray]


class AnalysisConfig(BaseModel):
    """Numerical configuration shared by all transforms.

    Attributes:
        max_grid_points: Memory budget for sampled grids (number of samples)
        scale_guard_samples: Minimum samples per wavelet width for the direct transform
        gauss_order: Gauss-Legendre nodes per panel
        panel_phase: Maximum phase advance (radians) of the integrand across one panel
        wavelet_tail_tol: Relative tail of the analysing wavelet dropped by the Fourier path
        series_tail_tol: Target tail certificate used when choosing a truncation depth
        lip_tolerance: Relative slack allowed by the Lipschitz bound check
        decay_margin: Margin above slope 1 required by the o(s) check
        fit_window: Number of finest scales used by exponent fits
        translation_points: Translations per scale used for max-over-t envelopes
        quadrature_level: Grid level used when a sampled signal is needed as quadrature input
        threads: Worker threads for async batch evaluation
    """

    model_config = ConfigDict(frozen=True)

    max_grid_points: int = 2**25
    scale_guard_samples: int = 8
    gauss_order: int = 16
    panel_phase: float = math.pi / 2
    wavelet_tail_tol: float = 1e-14
    series_tail_tol: float = 1e-10
    lip_tolerance: float = 0.05
    decay_margin: float = 0.05
    fit_window: int = 6
    translation_points: int = 257
    quadrature_level: int = 16
    threads: int = 1

    @field_validator("max_grid_points", "scale_guard_samples", "gauss_order", "translation_points", "threads")
    @classmethod
    def validate_positive_int(cls, v: int) -> int:
        """Validate positive integer settings.

        Args:
            v: Setting value

        Returns:
            Validated value

        Raises:
            ValueError: If the value is not positive
        """
        if v <= 0:
            raise ValueError("Value must be positive")
        return v

    @field_validator("panel_phase", "wavelet_tail_tol", "series_tail_tol")
    @classmethod
    def validate_positive_float(cls, v: float) -> float:
        """Validate positive float settings.

        Args:
            v: Setting value

        Returns:
            Validated value

        Raises:
            ValueError: If the value is not positive
        """
        if not v > 0:
            raise ValueError("Value must be positive")
        return v

    @field_validator("lip_tolerance", "decay_margin")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Validate relative tolerances.

        Args:
            v: Tolerance value

        Returns:
            Validated tolerance

        Raises:
            ValueError: If the tolerance is negative
        """
        if v < 0:
            raise ValueError("Tolerance cannot be negative")
        return v

    @field_validator("fit_window")
    @classmethod
    def validate_fit_window(cls, v: int) -> int:
        """Validate the exponent-fit window.

        Args:
            v: Number of scales

        Returns:
            Validated window

        Raises:
            ValueError: If fewer than three scales are requested
        """
        if v < 3:
            raise ValueError("Fit window needs at least 3 scales")
        return v

    @field_validator("quadrature_level")
    @classmethod
    def validate_quadrature_level(cls, v: int) -> int:
        """Validate the quadrature grid level.

        Args:
            v: Grid level

        Returns:
            Validated level

        Raises:
            ValueError: If the level is negative
        """
        if v < 0:
            raise ValueError("Grid level cannot be negative")
        return v

    @classmethod
    def from_env(cls, **overrides: object) -> "AnalysisConfig":
        """Build a configuration honouring ``FIF_WAVELET_THREADS``.

        Args:
            **overrides: Explicit settings, taking precedence over the environment

        Returns:
            AnalysisConfig: Configuration instance
        """
        values = dict(overrides)
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw and "threads" not in values:
            values["threads"] = int(raw)
        return cls(**values)


def polyval(coeffs: Sequence[float], x: ArrayLike) -> Union[float, np.ndarray]:
    """Evaluate a polynomial given by ascending coefficients (Horner's scheme).

    Args:
        coeffs: Coefficients c_0, c_1, ..., c_m
        x: Evaluation point(s)

    Returns:
        Polynomial value(s)
    """
    return npoly.polyval(x, np.asarray(coeffs, dtype=float))


def format_float(value: float) -> str:
    """Format a float with 17 significant digits so it round-trips exactly."""
    return f"{value:.17g}"


def dyadic_scales(min_exp: int, max_exp: int) -> List[float]:
    """Return the strictly decreasing dyadic scales 2^-min_exp, ..., 2^-max_exp.

    Args:
        min_exp: Exponent of the coarsest scale
        max_exp: Exponent of the finest scale

    Returns:
        List[float]: Scales, coarsest first
    """
    return [2.0**-exp for exp in range(min_exp, max_exp + 1)]


def uniform_translations(count: int) -> List[float]:
    """Return ``count`` uniformly spaced translations covering [0, 1]."""
    if count <= 0:
        return []
    if count == 1:
        return [0.5]
    return [i / (count - 1) for i in range(count)]


def max_relative_deviation(values: np.ndarray, reference: np.ndarray) -> float:
    """Normwise relative deviation max|values - reference| / max|reference|.

    Args:
        values: Compared values
        reference: Reference values of the same shape

    Returns:
        float: Relative deviation (0.0 when both are identically zero)
    """
    values = np.asarray(values)
    reference = np.asarray(reference)
    if values.size == 0:
        return 0.0
    scale = float(np.max(np.abs(reference)))
    diff = float(np.max(np.abs(values - reference)))
    if scale == 0.0:
        return 0.0 if diff == 0.0 else math.inf
    return diff / scale

