"""Decay constants and exponent fits for wavelet transforms of FIFs.

For 0 < delta <= 1 and |gamma_k| < 1/N^(delta+1) the transform obeys

    |W f(s, t)| <= N K* / (1 - N Omega) s^delta,   K* = K N^delta,   Omega = N^delta max_k |gamma_k|,

and for polynomial pieces of degree m with |gamma_k| < 1/N^(m+1) and M - 1 > m it is o(s).
"""

# Import built-in modules
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

# Import third-party modules
import numpy as np
from scipy import integrate
from scipy import special

# Import local modules
from fif_wavelet.exceptions import DomainError, PreconditionError
from fif_wavelet.fif import lipschitz_constant
from fif_wavelet.schema import FifGrid, InterpolationProblem, RegularityReport, ScalogramGrid
from fif_wavelet.utils import AnalysisConfig
from fif_wavelet.wavelets import CauchyWavelet

logger = logging.getLogger(__name__)

ScaleMaxima = Sequence[Tuple[float, float]]


def constants(problem: InterpolationProblem, delta: Optional[float] = None) -> RegularityReport:
    """Compute K, K*, Omega and the bound constant for Lipschitz order ``delta``.

    Hypothesis failures are reported as flags, never raised.

    Args:
        problem: Valid interpolation problem
        delta: Lipschitz order in (0, 1], defaults to ``problem.delta``

    Returns:
        RegularityReport: The constants part of the report
    """
    delta = problem.delta if delta is None else delta
    if not 0.0 < delta <= 1.0:
        raise DomainError(f"delta must lie in (0, 1], got {delta}", parameter="delta", value=delta)
    N = problem.N
    K, certificate = lipschitz_constant(problem)
    scale = N**delta
    omega = scale * problem.gamma_max
    n_omega = N * omega
    bound_finite = n_omega < 1.0
    return RegularityReport(
        delta=delta,
        K=K,
        K_certificate=certificate,
        K_star=K * scale,
        Omega=omega,
        N_Omega=n_omega,
        bound_C=N * K * scale / (1.0 - n_omega) if bound_finite else None,
        bound_finite=bound_finite,
        hypothesis_ok=all(abs(g) < 1.0 / N ** (delta + 1) for g in problem.gamma),
        smoothness_hypothesis_ok=all(abs(g) < 1.0 / N ** (problem.max_degree + 1) for g in problem.gamma),
    )


def verify_lip_bound(
    report: RegularityReport, scalogram: ScalogramGrid, tolerance: float = 0.05
) -> Tuple[bool, float]:
    """Check |W(s, t)| <= bound_C s^delta (1 + tolerance) over a scalogram.

    Returns:
        Tuple[bool, float]: (ok, worst ratio |W| / (bound_C s^delta))

    Raises:
        PreconditionError: If the contraction hypothesis does not hold
    """
    if not report.hypothesis_ok or report.bound_C is None:
        raise PreconditionError(
            f"Bound needs |gamma_k| < 1/N^(delta+1) (N*Omega={report.N_Omega:.6g})",
            hypothesis="gamma_lipschitz",
            details={"N_Omega": report.N_Omega, "delta": report.delta},
        )
    if scalogram.values.size == 0 or not np.any(scalogram.magnitude):
        return True, 0.0
    if report.bound_C == 0.0:
        return False, math.inf
    envelope = report.bound_C * np.asarray(scalogram.scales) ** report.delta
    worst = float(np.max(scalogram.magnitude / envelope[:, None]))
    return worst <= 1.0 + tolerance, worst


def fit_decay_exponent(per_scale_max: ScaleMaxima) -> Tuple[float, float]:
    """Least-squares slope of log2 max|W| against log2 s.

    Args:
        per_scale_max: (s, max_t |W(s, .)|) pairs

    Returns:
        Tuple[float, float]: (slope, RMS residual of the linear fit)

    Raises:
        DomainError: With fewer than 3 scales or a non-positive maximum
    """
    if len(per_scale_max) < 3:
        raise DomainError(
            f"Exponent fit needs at least 3 scales, got {len(per_scale_max)}",
            parameter="per_scale_max",
            value=len(per_scale_max),
        )
    scales = np.array([s for s, _ in per_scale_max], dtype=float)
    maxima = np.array([m for _, m in per_scale_max], dtype=float)
    if np.any(maxima <= 0.0) or np.any(scales <= 0.0):
        raise DomainError("Exponent fit needs positive scales and maxima", parameter="per_scale_max")
    log_s, log_m = np.log2(scales), np.log2(maxima)
    slope, intercept = np.polyfit(log_s, log_m, 1)
    residual = math.sqrt(float(np.mean((log_m - (slope * log_s + intercept)) ** 2)))
    return float(slope), residual


def window_stability(per_scale_max: ScaleMaxima) -> Optional[float]:
    """Largest slope change when the coarsest or the finest scale is dropped.

    Returns None when fewer than four scales are available.
    """
    if len(per_scale_max) < 4:
        return None
    full, _ = fit_decay_exponent(per_scale_max)
    without_coarsest, _ = fit_decay_exponent(per_scale_max[1:])
    without_finest, _ = fit_decay_exponent(per_scale_max[:-1])
    return max(abs(full - without_coarsest), abs(full - without_finest))


def _finest(per_scale_max: List[Tuple[float, float]], window: int) -> List[Tuple[float, float]]:
    ordered = sorted(per_scale_max, key=lambda item: item[0], reverse=True)
    return ordered[-window:]


def verify_o_of_s(
    problem: InterpolationProblem,
    scalogram: ScalogramGrid,
    w: CauchyWavelet,
    config: Optional[AnalysisConfig] = None,
) -> Tuple[bool, float]:
    """Check that max_t |W(s, .)| decays faster than s over the finest scales.

    Args:
        problem: Problem with polynomial pieces of maximal degree m
        scalogram: Transform of the problem's FIF
        w: Analysing wavelet used for the scalogram
        config: Fit window and margin

    Returns:
        Tuple[bool, float]: (slope > 1 + margin, fitted slope); (True, inf) for f = 0

    Raises:
        PreconditionError: If |gamma_k| >= 1/N^(m+1) for some k or M - 1 <= m
    """
    config = config or AnalysisConfig()
    m, N = problem.max_degree, problem.N
    limit = 1.0 / N ** (m + 1)
    if not all(abs(g) < limit for g in problem.gamma):
        raise PreconditionError(
            f"o(s) decay needs |gamma_k| < 1/N^(m+1) = {limit:.6g}",
            hypothesis="gamma_smoothness",
            details={"gamma_max": problem.gamma_max, "limit": limit},
        )
    if not w.M - 1 > m:
        raise PreconditionError(
            f"o(s) decay needs M - 1 > m (M={w.M}, m={m})",
            hypothesis="wavelet_order",
            details={"M": w.M, "m": m},
        )
    maxima = scalogram.per_scale_max()
    if problem.is_zero or all(value == 0.0 for _, value in maxima):
        return True, math.inf
    slope, _ = fit_decay_exponent(_finest(maxima, config.fit_window))
    return slope > 1.0 + config.decay_margin, slope


def oscillation_exponent(grid: FifGrid, levels: Iterable[int]) -> Tuple[float, float]:
    """Hoelder exponent from max |f(x + h) - f(x)| at h = N^-j on the sampled grid.

    Args:
        grid: Sampled signal
        levels: Step levels j, each 1 <= j <= grid.level

    Returns:
        Tuple[float, float]: (fitted exponent, RMS residual)
    """
    data = []
    for j in levels:
        if not 1 <= j <= grid.level:
            raise DomainError(f"Step level must lie in 1..{grid.level}, got {j}", parameter="levels", value=j)
        step = grid.N ** (grid.level - j)
        oscillation = float(np.max(np.abs(grid.values[step:] - grid.values[:-step])))
        data.append((float(grid.N) ** -j, oscillation))
    return fit_decay_exponent(data)


def split_scale_integral(M: int, p: int, s: float) -> Tuple[float, float]:
    """Exact lower and upper parts of s^M int_0^inf w^(M-p) e^(-sw) dw split at w = s.

    lower = s^(p-1) gamma(M-p+1, s^2), upper = s^(p-1) Gamma(M-p+1, s^2).

    Returns:
        Tuple[float, float]: (lower, upper)
    """
    if not 0 <= p <= M:
        raise DomainError(f"Need 0 <= p <= M, got p={p}, M={M}", parameter="p", value=p)
    if not s > 0.0:
        raise DomainError(f"Scale must be positive, got {s}", parameter="s", value=s)
    order = M - p + 1
    complete = special.gamma(order)
    prefactor = s ** (p - 1)
    lower = prefactor * complete * special.gammainc(order, s * s)
    upper = prefactor * complete * special.gammaincc(order, s * s)
    return float(lower), float(upper)


def split_scale_quadrature(M: int, p: int, s: float) -> Tuple[float, float]:
    """Adaptive-quadrature counterpart of :func:`split_scale_integral`."""
    if not s > 0.0:
        raise DomainError(f"Scale must be positive, got {s}", parameter="s", value=s)

    def integrand(v: float) -> float:
        return v ** (M - p) * math.exp(-v)

    prefactor = s ** (p - 1)
    lower, _ = integrate.quad(integrand, 0.0, s * s, epsabs=0.0, epsrel=1e-13)
    upper, _ = integrate.quad(integrand, s * s, np.inf, epsabs=0.0, epsrel=1e-13)
    return prefactor * lower, prefactor * upper


def build_report(
    problem: InterpolationProblem,
    scalogram: ScalogramGrid,
    delta: Optional[float] = None,
    config: Optional[AnalysisConfig] = None,
) -> RegularityReport:
    """Assemble constants, bound check, fitted exponent and provenance for one scalogram.

    Args:
        problem: Interpolation problem
        scalogram: Transform of the problem's FIF
        delta: Lipschitz order, defaults to ``problem.delta``
        config: Analysis configuration

    Returns:
        RegularityReport: Complete report
    """
    config = config or AnalysisConfig()
    report = constants(problem, delta)
    maxima = scalogram.per_scale_max()
    update = {
        "per_scale_max": maxima,
        "provenance": {
            "problem_sha256": problem.digest(),
            "scales": list(scalogram.scales),
            "translations": len(scalogram.translations),
            "wavelet_order": scalogram.wavelet_order,
            "method": scalogram.method,
            "conjugate": scalogram.conjugate,
            "signal_level": scalogram.signal_level,
        },
    }

    window = _finest(maxima, config.fit_window)
    if len(window) >= 3 and all(value > 0.0 for _, value in window):
        slope, residual = fit_decay_exponent(window)
        stability = window_stability(window)
        update.update(fitted_exponent=slope, fit_residual=residual, window_stability=stability)
        if stability is not None and stability >= config.decay_margin:
            logger.warning("[regularity] slope changes by %.3g when the window is trimmed", stability)

    if report.hypothesis_ok:
        ok, worst = verify_lip_bound(report, scalogram, config.lip_tolerance)
        update.update(lip_bound_ok=ok, worst_ratio=worst)
    return report.model_copy(update=update)
