"""Continuous wavelet transform of fractal interpolation functions.

W f(s, t) = (1/s) int f(x) conj(psi((x - t)/s)) dx, with f extended by zero outside [0, 1].
Two independent routes are provided: Simpson quadrature against the sampled signal, and
Gauss-Legendre quadrature of the Fourier-domain form

    W f(s, t) = 1/(2 pi s) int_0^inf f^(v/s) psi^(v) e^{itv/s} dv.

The unconjugated variant (1/s) int f(x) psi((x - t)/s) dx is available on both routes.
"""

# Import built-in modules
import logging
import math
from typing import Optional, Sequence, Tuple, Union

# Import third-party modules
import numpy as np
from numpy.polynomial import legendre
from scipy import integrate
from scipy import special

# Import local modules
from fif_wavelet.exceptions import AccuracyError, DomainError
from fif_wavelet.schema import FifGrid, InterpolationProblem, ScalogramGrid, WaveletMethodName
from fif_wavelet.spectrum import SpectrumEvaluator
from fif_wavelet.utils import AnalysisConfig, polyval
from fif_wavelet.wavelets import CauchyWavelet

logger = logging.getLogger(__name__)

MAX_RECURSION_DEPTH = 4


def _check_scale(s: float) -> None:
    if not s > 0.0 or not math.isfinite(s):
        raise DomainError(f"Scale must be positive and finite, got {s}", parameter="s", value=s)


def check_scale_guard(grid: FifGrid, s: float, config: Optional[AnalysisConfig] = None) -> None:
    """Raise unless the wavelet width s covers enough grid samples.

    Raises:
        AccuracyError: If s < scale_guard_samples * N^-J
    """
    config = config or AnalysisConfig()
    _check_scale(s)
    limit = config.scale_guard_samples * grid.spacing
    if s < limit:
        raise AccuracyError(
            f"Scale {s} is below the resolution guard {limit} of the level-{grid.level} grid",
            guard="scale",
            value=s,
            limit=limit,
        )


def _simpson(values: np.ndarray, spacing: float) -> complex:
    return complex(integrate.simpson(values.real, dx=spacing), integrate.simpson(values.imag, dx=spacing))


def direct_row(
    grid: FifGrid,
    w: CauchyWavelet,
    s: float,
    translations: Sequence[float],
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> np.ndarray:
    """Direct transform at one scale for several translations.

    Returns:
        np.ndarray: Complex values, one per translation
    """
    check_scale_guard(grid, s, config)
    x = grid.x
    out = np.empty(len(translations), dtype=complex)
    for i, t in enumerate(translations):
        kernel = w.time((x - t) / s)
        if conjugate:
            kernel = np.conj(kernel)
        out[i] = _simpson(grid.values * kernel, grid.spacing) / s
    return out


def cwt_direct(
    grid: FifGrid,
    w: CauchyWavelet,
    s: float,
    t: float,
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> complex:
    """Composite Simpson quadrature of (1/s) f(x) conj(psi((x - t)/s)) over [0, 1].

    Args:
        grid: Sampled signal
        w: Analysing wavelet
        s: Scale, at least scale_guard_samples grid spacings
        t: Translation, any real (the signal is zero outside [0, 1])
        conjugate: Conjugate the wavelet (default) or not
        config: Analysis configuration

    Returns:
        complex: W f(s, t)

    Raises:
        AccuracyError: If the scale guard is violated
    """
    return complex(direct_row(grid, w, s, [t], conjugate, config)[0])


def gauss_panels(upper: float, width: float, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [0, upper] split into panels of at most ``width``."""
    count = max(1, math.ceil(upper / width))
    edges = np.linspace(0.0, upper, count + 1)
    ref_nodes, ref_weights = legendre.leggauss(order)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * ref_nodes[None, :]).ravel()
    weights = (half[:, None] * ref_weights[None, :]).ravel()
    return nodes, weights


def frequency_cutoff(w: CauchyWavelet, config: AnalysisConfig) -> float:
    """v_max with int_{v_max}^inf v^M e^{-v} dv = wavelet_tail_tol * M!."""
    return float(special.gammainccinv(w.M + 1, config.wavelet_tail_tol))


def fourier_row(
    evaluator: SpectrumEvaluator,
    w: CauchyWavelet,
    s: float,
    translations: Sequence[float],
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> np.ndarray:
    """Fourier-domain transform at one scale for several translations.

    f^ is evaluated once on a panel schedule fine enough for the largest |t| of the row.

    Returns:
        np.ndarray: Complex values, one per translation
    """
    _check_scale(s)
    config = config or evaluator.config
    ts = np.asarray(translations, dtype=float)
    if ts.size == 0:
        return np.empty(0, dtype=complex)
    t_max = float(np.max(np.abs(ts)))
    upper = frequency_cutoff(w, config)
    nodes, weights = gauss_panels(upper, config.panel_phase * s / (t_max + 1.0), config.gauss_order)
    logger.debug("[fourier] s=%g: %d nodes up to v=%g", s, nodes.size, upper)

    sign = 1.0 if conjugate else -1.0
    spectrum, _ = evaluator.ft_series(sign * nodes / s)
    weighted = weights * w.hat(nodes) * spectrum
    out = np.empty(ts.size, dtype=complex)
    for i, t in enumerate(ts):
        out[i] = np.sum(weighted * np.exp(sign * 1j * t * nodes / s))
    return out / (2.0 * math.pi * s)


def cwt_fourier(
    evaluator: SpectrumEvaluator,
    w: CauchyWavelet,
    s: float,
    t: float,
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> complex:
    """Fourier-domain CWT, 1/(2 pi) int f^(w) psi^(sw) e^{itw} dw, using the series for f^.

    Args:
        evaluator: Spectrum evaluator of the signal
        w: Analysing wavelet
        s: Scale > 0
        t: Translation
        conjugate: Conjugated wavelet (default) or the unconjugated variant
        config: Quadrature settings, defaults to the evaluator's configuration

    Returns:
        complex: W f(s, t)
    """
    return complex(fourier_row(evaluator, w, s, [t], conjugate, config)[0])


def cwt_q_piece(
    problem: InterpolationProblem,
    k: int,
    w: CauchyWavelet,
    s: float,
    t: float,
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> complex:
    """Transform of the piece signal q_k(L_k^-1(x)) supported on I_k.

    Gauss-Legendre panels of width at most s/2 over I_k only.

    Returns:
        complex: (1/s) int_{I_k} q_k(Nx - k + 1) conj(psi((x - t)/s)) dx
    """
    config = config or AnalysisConfig()
    _check_scale(s)
    if not 1 <= k <= problem.N:
        raise DomainError(f"Piece index must lie in 1..{problem.N}, got {k}", parameter="k", value=k)
    coeffs = problem.q[k - 1]
    if all(c == 0.0 for c in coeffs):
        return 0j
    N = problem.N
    nodes, weights = gauss_panels(1.0 / N, 0.5 * s, config.gauss_order)
    x = nodes + (k - 1) / N
    kernel = w.time((x - t) / s)
    if conjugate:
        kernel = np.conj(kernel)
    return complex(np.sum(weights * polyval(coeffs, N * nodes) * kernel) / s)


def recursion_residual(
    grid: FifGrid,
    problem: InterpolationProblem,
    w: CauchyWavelet,
    s: float,
    t: float,
    depth: int = 1,
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> float:
    """Residual of the scale-recursion identity of the transform.

    Depth 1 checks W f(s, t) = sum_k [gamma_k W f(Ns, Nt - (k-1)) + W(q_k o L_k^-1)(s, t)];
    deeper levels expand the W f terms again, down to ``depth`` <= 4.

    Raises:
        AccuracyError: If s violates the scale guard
        DomainError: If depth is outside 1..4
    """
    if not 1 <= depth <= MAX_RECURSION_DEPTH:
        raise DomainError(
            f"Recursion depth must lie in 1..{MAX_RECURSION_DEPTH}, got {depth}", parameter="depth", value=depth
        )
    config = config or AnalysisConfig()
    check_scale_guard(grid, s, config)
    N = problem.N

    def expand(level: int, weight: float, scale: float, shift: float) -> complex:
        if level == depth:
            return weight * cwt_direct(grid, w, scale, shift, conjugate, config)
        total = 0j
        for k in range(1, N + 1):
            total += weight * cwt_q_piece(problem, k, w, scale, shift, conjugate, config)
            child = weight * problem.gamma[k - 1]
            if child != 0.0:
                total += expand(level + 1, child, N * scale, N * shift - (k - 1))
        return total

    lhs = cwt_direct(grid, w, s, t, conjugate, config)
    return abs(lhs - expand(0, 1.0, s, t))


def scalogram(
    grid: Optional[FifGrid],
    evaluator: Optional[SpectrumEvaluator],
    w: CauchyWavelet,
    scales: Sequence[float],
    translations: Sequence[float],
    method: Union[str, WaveletMethodName] = WaveletMethodName.DIRECT,
    conjugate: bool = True,
    config: Optional[AnalysisConfig] = None,
) -> ScalogramGrid:
    """Evaluate the transform over scales x translations.

    Args:
        grid: Sampled signal, required by the direct method
        evaluator: Spectrum evaluator, required by the Fourier method
        w: Analysing wavelet
        scales: Strictly decreasing positive scales
        translations: Translations
        method: ``direct`` or ``fourier``
        conjugate: Conjugated (default) or unconjugated transform
        config: Analysis configuration

    Returns:
        ScalogramGrid: Values shaped (len(scales), len(translations))
    """
    method = WaveletMethodName(method)
    if method is WaveletMethodName.DIRECT and grid is None:
        raise DomainError("The direct method needs a sampled grid", parameter="grid")
    if method is WaveletMethodName.FOURIER and evaluator is None:
        raise DomainError("The Fourier method needs a spectrum evaluator", parameter="evaluator")

    rows = []
    for s in scales:
        if method is WaveletMethodName.DIRECT:
            rows.append(direct_row(grid, w, s, translations, conjugate, config))  # type: ignore[arg-type]
        else:
            rows.append(fourier_row(evaluator, w, s, translations, conjugate, config))  # type: ignore[arg-type]
    values = np.vstack(rows) if rows else np.zeros((0, len(translations)), dtype=complex)
    return ScalogramGrid(
        scales=list(scales),
        translations=list(translations),
        values=values,
        method=method.value,
        wavelet_order=w.M,
        conjugate=conjugate,
        signal_level=grid.level if method is WaveletMethodName.DIRECT else None,
    )
