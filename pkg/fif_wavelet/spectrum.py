"""Fourier transform of fractal interpolation functions.

With f extended by zero outside [0, 1], f^(w) = int f(x) e^{-iwx} dx satisfies

    f^(w) = (1/N) sum_k e^{-iw(k-1)/N} (gamma_k f^(w/N) + M_k(w/N)),   M_k(u) = int_0^1 q_k(x) e^{-iux} dx,

and unrolling it gives a series over levels j whose nested sums over (k_1..k_{j-1}) and k_j
separate. Level j costs O(N) once the products G_1(w)...G_{j-1}(w) are carried along.
"""

# Import built-in modules
from functools import cached_property
import itertools
import logging
import math
from typing import Optional, Sequence, Tuple, Union

# Import third-party modules
import numpy as np
from scipy import integrate

# Import local modules
from fif_wavelet.exceptions import AccuracyError, DomainError, ResourceError
from fif_wavelet.fif import reference_level, sample_grid
from fif_wavelet.schema import FifGrid, InterpolationProblem
from fif_wavelet.utils import AnalysisConfig

logger = logging.getLogger(__name__)

Frequency = Union[float, Sequence[float], np.ndarray]

SERIES_EXTRA_TERMS = 25
MAX_BRUTE_DEPTH = 6
MAX_BRUTE_PIECES = 4
MIN_QUADRATURE_INTERVALS = 64
MAX_AUTO_TRUNCATION = 200
FALLBACK_TRUNCATION = 60


def _moment_table(u: np.ndarray, degree: int) -> np.ndarray:
    """I_r(u) = int_0^1 x^r e^{-iux} dx for r = 0..degree; shape (degree + 1, len(u))."""
    out = np.empty((degree + 1, u.size), dtype=complex)
    radius = max(1.0, float(degree))
    small = np.abs(u) < radius

    if not np.all(small):
        z = -1j * u[~small]
        e = np.exp(z)
        prev = (e - 1.0) / z
        out[0, ~small] = prev
        for r in range(1, degree + 1):
            prev = (e - r * prev) / z
            out[r, ~small] = prev

    if np.any(small):
        n = np.arange(int(math.e * radius) + SERIES_EXTRA_TERMS)
        ratios = (-1j * u[small])[:, None] / np.maximum(n, 1)[None, :]
        ratios[:, 0] = 1.0
        powers = np.cumprod(ratios, axis=1)
        for r in range(degree + 1):
            out[r, small] = powers @ (1.0 / (r + n + 1.0))
    return out


def poly_moment(coeffs: Sequence[float], u: Frequency) -> Union[complex, np.ndarray]:
    """int_0^1 q(x) e^{-iux} dx for q given by ascending coefficients.

    Uses the integration-by-parts recurrence I_r = (e^{-iu} - r I_{r-1}) / (-iu) away from the
    origin and the Taylor series sum_n (-iu)^n / (n! (r + n + 1)) near it, where the recurrence
    has a removable singularity.

    Args:
        coeffs: Coefficients c_0..c_m
        u: Frequency or array of frequencies

    Returns:
        Complex value, or array shaped like ``u``
    """
    c = np.asarray(coeffs, dtype=float)
    u_arr = np.asarray(u, dtype=float)
    table = _moment_table(u_arr.ravel(), c.size - 1)
    result = (c @ table).reshape(u_arr.shape)
    return complex(result) if u_arr.ndim == 0 else result


def _simpson(values: np.ndarray, spacing: float) -> complex:
    real = integrate.simpson(values.real, dx=spacing)
    imag = integrate.simpson(values.imag, dx=spacing)
    return complex(real, imag)


def _check_quadrature_grid(grid: FifGrid, omega: float) -> None:
    if grid.intervals < MIN_QUADRATURE_INTERVALS:
        raise AccuracyError(
            f"Quadrature needs at least {MIN_QUADRATURE_INTERVALS} grid intervals, got {grid.intervals}",
            guard="samples",
            value=grid.intervals,
            limit=MIN_QUADRATURE_INTERVALS,
        )
    limit = math.pi * grid.intervals
    if abs(omega) > limit:
        raise AccuracyError(
            f"|omega|={abs(omega)} exceeds the grid resolution limit pi*N^J={limit}",
            guard="resolution",
            value=abs(omega),
            limit=limit,
        )


def ft_quadrature(grid: FifGrid, omega: Frequency) -> Union[complex, np.ndarray]:
    """Composite Simpson quadrature of f(x) e^{-iwx} over [0, 1].

    Args:
        grid: Sampled signal, at least 64 intervals
        omega: Frequency or array of frequencies, |w| <= pi N^J

    Returns:
        Complex value, or array shaped like ``omega``

    Raises:
        AccuracyError: If the grid is too coarse for the requested frequencies
    """
    w_arr = np.asarray(omega, dtype=float)
    x = grid.x
    out = np.empty(w_arr.size, dtype=complex)
    for i, w in enumerate(w_arr.ravel()):
        _check_quadrature_grid(grid, float(w))
        out[i] = _simpson(grid.values * np.exp(-1j * w * x), grid.spacing)
    result = out.reshape(w_arr.shape)
    return complex(result) if w_arr.ndim == 0 else result


def ft_quadrature_error(grid: FifGrid, omega: float) -> float:
    """Error estimate |S_h - S_Nh| of :func:`ft_quadrature` from the next coarser grid."""
    coarse = grid.restrict(grid.level - 1)
    fine_value = ft_quadrature(grid, omega)
    coarse_value = _simpson(coarse.values * np.exp(-1j * omega * coarse.x), coarse.spacing)
    return abs(fine_value - coarse_value)


class SpectrumEvaluator:
    """Truncated-series evaluator of the Fourier transform of a FIF.

    Args:
        problem: Valid interpolation problem
        J_trunc: Series truncation depth (levels 1..J_trunc)
        omega_min: Frequencies below this are delegated to quadrature
        config: Analysis configuration
    """

    def __init__(
        self,
        problem: InterpolationProblem,
        J_trunc: int = 40,
        omega_min: float = 1e-6,
        config: Optional[AnalysisConfig] = None,
    ) -> None:
        if J_trunc < 1:
            raise DomainError(f"Truncation depth must be >= 1, got {J_trunc}", parameter="J_trunc", value=J_trunc)
        if omega_min < 0:
            raise DomainError("omega_min cannot be negative", parameter="omega_min", value=omega_min)
        self._problem = problem
        self._J_trunc = J_trunc
        self._omega_min = omega_min
        self._config = config or AnalysisConfig()
        self._gamma = np.asarray(problem.gamma, dtype=float)
        self._shifts = np.arange(problem.N, dtype=float)
        self._coeffs = [np.asarray(row, dtype=float) for row in problem.q]

    @property
    def problem(self) -> InterpolationProblem:
        """The evaluated problem."""
        return self._problem

    @property
    def J_trunc(self) -> int:
        """Series truncation depth."""
        return self._J_trunc

    @property
    def omega_min(self) -> float:
        """Small-frequency cutoff."""
        return self._omega_min

    @property
    def config(self) -> AnalysisConfig:
        """Analysis configuration."""
        return self._config

    @property
    def ratio(self) -> float:
        """Geometric ratio N * max|gamma_k| of the tail certificate."""
        return self._problem.N * self._problem.gamma_max

    @cached_property
    def reference_grid(self) -> FifGrid:
        """Sampled signal used by the small-frequency quadrature fallback."""
        return sample_grid(self._problem, reference_level(self._problem.N, self._config), self._config)

    def tail_bound(self, J: Optional[int] = None) -> float:
        """Certificate for the terms j > J: A rho^J / (1 - rho), rho = N max|gamma|.

        A = max_k int|q_k| / N, bounded through sum_r |c_{k,r}| / (r + 1).
        Returns +inf when rho >= 1.
        """
        J = self._J_trunc if J is None else J
        rho = self.ratio
        if rho >= 1.0:
            return math.inf
        amplitude = max(math.fsum(abs(c) / (r + 1) for r, c in enumerate(row)) for row in self._problem.q)
        return amplitude / self._problem.N * rho**J / (1.0 - rho)

    @classmethod
    def auto_truncation(cls, problem: InterpolationProblem, tol: float = 1e-10) -> int:
        """Smallest depth whose tail certificate is below ``tol``."""
        evaluator = cls(problem, J_trunc=1)
        if evaluator.ratio >= 1.0:
            return FALLBACK_TRUNCATION
        for J in range(1, MAX_AUTO_TRUNCATION + 1):
            if evaluator.tail_bound(J) <= tol:
                return J
        return MAX_AUTO_TRUNCATION

    def _series(self, omega: np.ndarray, J: int) -> np.ndarray:
        N = self._problem.N
        total = np.zeros(omega.size, dtype=complex)
        product = np.ones(omega.size, dtype=complex)
        for j in range(1, J + 1):
            scale = float(N) ** j
            u = omega / scale
            phases = np.exp(-1j * np.outer(u, self._shifts))
            moments = np.stack([c @ _moment_table(u, c.size - 1) for c in self._coeffs], axis=1)
            total += product * np.sum(phases * moments, axis=1) / scale
            product = product * (phases @ self._gamma)
            if not np.any(product):
                break
        return total

    def _fallback(self, omega: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        grid = self.reference_grid
        values = np.array([ft_quadrature(grid, float(w)) for w in omega], dtype=complex)
        errors = np.array([ft_quadrature_error(grid, float(w)) for w in omega], dtype=float)
        return values, errors

    def ft_series(
        self, omega: Frequency, J_trunc: Optional[int] = None
    ) -> Tuple[Union[complex, np.ndarray], Union[float, np.ndarray]]:
        """Evaluate the truncated Fourier series of f.

        Args:
            omega: Frequency or array of frequencies
            J_trunc: Override of the truncation depth

        Returns:
            (value, tail_bound): tail_bound is the series tail certificate, +inf when
            N max|gamma| >= 1, or the quadrature error estimate for |w| < omega_min.
        """
        J = self._J_trunc if J_trunc is None else J_trunc
        if J < 1:
            raise DomainError(f"Truncation depth must be >= 1, got {J}", parameter="J_trunc", value=J)
        w_arr = np.asarray(omega, dtype=float)
        flat = w_arr.ravel()
        values = np.empty(flat.size, dtype=complex)
        bounds = np.full(flat.size, self.tail_bound(J))
        if math.isinf(bounds[0] if bounds.size else 0.0):
            logger.warning("[series] N*max|gamma|=%.6g >= 1, no tail certificate", self.ratio)

        small = np.abs(flat) < self._omega_min
        if not np.all(small):
            values[~small] = self._series(flat[~small], J)
        if np.any(small):
            values[small], bounds[small] = self._fallback(flat[small])

        if w_arr.ndim == 0:
            return complex(values[0]), float(bounds[0])
        return values.reshape(w_arr.shape), bounds.reshape(w_arr.shape)

    def ft_series_bruteforce(self, omega: Frequency, J: int) -> Union[complex, np.ndarray]:
        """Literal enumeration of the nested sums over (k_1, ..., k_j), j = 1..J.

        Args:
            omega: Frequency or array of frequencies
            J: Depth, at most 6, for N at most 4

        Returns:
            Complex value, or array shaped like ``omega``

        Raises:
            ResourceError: If the enumeration guard is exceeded
        """
        N = self._problem.N
        if J > MAX_BRUTE_DEPTH or N > MAX_BRUTE_PIECES:
            raise ResourceError(
                f"Brute-force enumeration limited to J<={MAX_BRUTE_DEPTH}, N<={MAX_BRUTE_PIECES} (got J={J}, N={N})",
                requested=N**J,
                limit=MAX_BRUTE_PIECES**MAX_BRUTE_DEPTH,
            )
        if J < 1:
            raise DomainError(f"Depth must be >= 1, got {J}", parameter="J", value=J)
        w_arr = np.asarray(omega, dtype=float)
        flat = w_arr.ravel()
        total = np.zeros(flat.size, dtype=complex)
        for j in range(1, J + 1):
            scale = float(N) ** j
            moments = [poly_moment(c, flat / scale) for c in self._coeffs]
            for ks in itertools.product(range(1, N + 1), repeat=j):
                weight = 1.0
                for k in ks[:-1]:
                    weight *= self._problem.gamma[k - 1]
                position = sum((k - 1) / float(N) ** i for i, k in enumerate(ks, start=1))
                total += weight * np.exp(-1j * flat * position) * moments[ks[-1] - 1] / scale
        return complex(total[0]) if w_arr.ndim == 0 else total.reshape(w_arr.shape)

    def slopes(self) -> np.ndarray:
        """Slopes c_k of linear pieces q_k(x) = c_k x + d_k.

        Raises:
            DomainError: If some q_k has degree above one
        """
        slopes = np.zeros(self._problem.N)
        for k, c in enumerate(self._coeffs):
            trimmed = np.trim_zeros(c, "b")
            if trimmed.size > 2:
                raise DomainError(f"q_{k + 1} is not linear (degree {trimmed.size - 1})", parameter="q", value=k + 1)
            if trimmed.size == 2:
                slopes[k] = trimmed[1]
        return slopes

    def ft_linear(self, omega: Frequency) -> Union[complex, np.ndarray]:
        """Closed form for linear pieces.

        f^(w) = w^-2 sum_j N^j (e^{-iw/N^j} - 1) sum_{k_1..k_j} gamma_{k_1}..gamma_{k_{j-1}} c_{k_j} e^{-iw p},
        with the nested sum factorised as in :meth:`ft_series`.

        Raises:
            DomainError: If some q_k is not linear
        """
        slopes = self.slopes()
        w_arr = np.asarray(omega, dtype=float)
        flat = w_arr.ravel()
        values = np.empty(flat.size, dtype=complex)
        small = np.abs(flat) < self._omega_min
        large = flat[~small]
        if large.size:
            N = self._problem.N
            total = np.zeros(large.size, dtype=complex)
            product = np.ones(large.size, dtype=complex)
            for j in range(1, self._J_trunc + 1):
                scale = float(N) ** j
                u = large / scale
                phases = np.exp(-1j * np.outer(u, self._shifts))
                # e^{-iu} - 1 without cancellation.
                step = -2j * np.sin(u / 2) * np.exp(-0.5j * u)
                total += scale * step * product * (phases @ slopes)
                product = product * (phases @ self._gamma)
                if not np.any(product):
                    break
            values[~small] = total / large**2
        if np.any(small):
            values[small] = self._fallback(flat[small])[0]
        return complex(values[0]) if w_arr.ndim == 0 else values.reshape(w_arr.shape)
