"""Acceptance suite behind ``fif-wavelet verify-all``.

Each check is a pure function of the problem under test and the configuration, returning a
:class:`CheckResult`. Checks that are about a specific regime build their own fixture.
"""

# Import built-in modules
import logging
import math
import time
from typing import Callable, List, Optional, Tuple

# Import third-party modules
import numpy as np
from scipy import integrate

# Import local modules
from fif_wavelet.cwt import direct_row, frequency_cutoff, gauss_panels, recursion_residual, scalogram
from fif_wavelet.exceptions import FifWaveletError
from fif_wavelet.fif import rb_iterate, reference_level, sample_grid
from fif_wavelet.fixtures import random_problem, smoothstep, takagi, tent
from fif_wavelet.regularity import (
    constants,
    fit_decay_exponent,
    oscillation_exponent,
    split_scale_integral,
    split_scale_quadrature,
    verify_lip_bound,
    verify_o_of_s,
)
from fif_wavelet.schema import CheckResult, FifGrid, InterpolationProblem, VerificationReport
from fif_wavelet.spectrum import SpectrumEvaluator, ft_quadrature
from fif_wavelet.utils import AnalysisConfig, dyadic_scales, max_relative_deviation, polyval, uniform_translations
from fif_wavelet.wavelets import CauchyWavelet

logger = logging.getLogger(__name__)

SEED = 20240611
Check = Callable[[InterpolationProblem, AnalysisConfig], CheckResult]


def _result(name: str, value: float, threshold: float, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(value <= threshold), value=value, threshold=threshold, detail=detail)


def _reference_grid(problem: InterpolationProblem, config: AnalysisConfig) -> FifGrid:
    return sample_grid(problem, reference_level(problem.N, config), config)


def check_functional_equation(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Interpolation residual, functional-equation residual and Read-Bajraktarevic convergence."""
    N = problem.N
    level = max(2, int(math.log(4096) / math.log(N) + 1e-9))
    fine = sample_grid(problem, level, config)
    coarse = sample_grid(problem, level - 1, config)

    interpolation = float(np.max(np.abs(fine.values[fine.knot_indices] - np.asarray(problem.y))))

    rng = np.random.default_rng(SEED)
    idx = rng.integers(0, coarse.intervals + 1, 10_000)
    ks = rng.integers(1, N + 1, 10_000)
    residual = 0.0
    for k in range(1, N + 1):
        sel = idx[ks == k]
        lhs = fine.values[(k - 1) * coarse.intervals + sel]
        rhs = problem.gamma[k - 1] * coarse.values[sel] + polyval(problem.q[k - 1], sel / coarse.intervals)
        if sel.size:
            residual = max(residual, float(np.max(np.abs(lhs - rhs))))

    rb_level = min(8, level)
    start = np.zeros(N**rb_level + 1)
    start[0], start[-1] = problem.y[0], problem.y[-1]
    iterated = rb_iterate(problem, FifGrid(N=N, level=rb_level, values=start), 40)
    distance = float(np.max(np.abs(iterated.values - sample_grid(problem, rb_level, config).values)))

    passed = interpolation <= 1e-12 and residual <= 1e-10 and distance <= 1e-12
    detail = f"interpolation={interpolation:.3g} functional_equation={residual:.3g} rb_distance={distance:.3g}"
    return CheckResult(
        name="functional_equation", passed=passed, value=max(interpolation, residual, distance), detail=detail
    )


def check_factorization(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Factorised series against literal enumeration on 20 random problems."""
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for case in range(20):
        N = (2, 3, 4)[case % 3]
        J = int(rng.integers(1, 6))
        candidate = random_problem(rng, N)
        evaluator = SpectrumEvaluator(candidate, J_trunc=J, config=config)
        omegas = rng.uniform(-100.0, 100.0, 100)
        series, _ = evaluator.ft_series(omegas)
        brute = evaluator.ft_series_bruteforce(omegas, J)
        worst = max(worst, float(np.max(np.abs(series - brute) / np.maximum(1.0, np.abs(brute)))))
    return _result("factorization", worst, 1e-12, "20 random problems, N in {2,3,4}, J <= 5")


def check_series_vs_quadrature(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Series against grid quadrature within the tail certificate, and the linear closed form."""
    omegas = np.geomspace(0.5, 200.0, 64)
    evaluator = SpectrumEvaluator(problem, J_trunc=40, config=config)
    series, tails = evaluator.ft_series(omegas)
    quad = np.asarray(ft_quadrature(_reference_grid(problem, config), omegas))
    excess = float(np.max(np.abs(series - quad) - tails))
    passed = excess <= 1e-6
    detail = f"max(|series - quad| - tail)={excess:.3g}"
    if max(len(np.trim_zeros(np.asarray(row, dtype=float), "b")) for row in problem.q) <= 2:
        linear = float(np.max(np.abs(evaluator.ft_linear(omegas) - series)))
        passed = passed and linear <= 1e-10
        detail += f" |linear - series|={linear:.3g}"
    return CheckResult(name="series_vs_quadrature", passed=passed, value=excess, threshold=1e-6, detail=detail)


def _inverse_transform(w: CauchyWavelet, x: float, config: AnalysisConfig) -> complex:
    nodes, weights = gauss_panels(frequency_cutoff(w, config), config.panel_phase / (1.0 + abs(x)), config.gauss_order)
    return complex(np.sum(weights * w.hat(nodes) * np.exp(1j * nodes * x)) / (2.0 * math.pi))


def wavelet_integral(w: CauchyWavelet, half_width: float = 1e4) -> complex:
    """Adaptive quadrature of psi over [-half_width, half_width]."""
    points = [p for p in (-1e3, -1e2, -10.0, -1.0, 0.0, 1.0, 10.0, 1e2, 1e3) if abs(p) < half_width]
    options = {"points": points, "limit": 500, "epsabs": 1e-13}
    real, _ = integrate.quad(lambda x: w.time(x).real, -half_width, half_width, **options)
    imag, _ = integrate.quad(lambda x: w.time(x).imag, -half_width, half_width, **options)
    return complex(real, imag)


def check_wavelet_pair(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Closed-form psi against the numerical inverse transform of psi^, and int psi = 0."""
    worst = 0.0
    mean = 0.0
    ratio = 0.0
    for M in (2, 3, 4, 6):
        w = CauchyWavelet(M=M)
        for x in np.linspace(-8.0, 8.0, 64):
            worst = max(worst, abs(_inverse_transform(w, float(x), config) - w.time(float(x))))
        mean = max(mean, abs(wavelet_integral(w)))
        small = 2.0 ** -np.arange(10, 21)
        ratio = max(ratio, float(np.max(np.abs(w.hat(small) / small**M - 1.0))))
    passed = worst <= 1e-8 and mean <= 1e-8 and ratio <= 1e-3
    detail = f"inverse={worst:.3g} mean={mean:.3g} low_frequency_ratio={ratio:.3g}"
    return CheckResult(name="wavelet_pair", passed=passed, value=max(worst, mean), threshold=1e-8, detail=detail)


def check_dual_path(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Direct and Fourier-domain scalograms on a 5 x 9 grid."""
    w = CauchyWavelet(M=4)
    scales = dyadic_scales(3, 7)
    translations = uniform_translations(9)
    grid = _reference_grid(problem, config)
    evaluator = SpectrumEvaluator(problem, J_trunc=40, config=config)
    direct = scalogram(grid, None, w, scales, translations, "direct", config=config)
    fourier = scalogram(None, evaluator, w, scales, translations, "fourier", config=config)
    return _result("dual_path", max_relative_deviation(direct.values, fourier.values), 1e-3, "M=4, 5 x 9 grid")


def check_recursion(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """One-step scale recursion at 25 random (s, t)."""
    rng = np.random.default_rng(SEED)
    grid = _reference_grid(problem, config)
    w = CauchyWavelet(M=4)
    worst = 0.0
    for _ in range(25):
        s = float(2.0 ** rng.uniform(-6.0, -3.0))
        t = float(rng.uniform(0.0, 1.0))
        worst = max(worst, recursion_residual(grid, problem, w, s, t, config=config))
    return _result("recursion_identity", worst, 1e-5, "25 random points, s in [2^-6, 2^-3]")


def _direct_maxima(
    problem: InterpolationProblem, M: int, scales: List[float], config: AnalysisConfig
) -> Tuple[FifGrid, List[Tuple[float, float]]]:
    grid = _reference_grid(problem, config)
    ts = uniform_translations(config.translation_points)
    maxima = [(s, float(np.max(np.abs(direct_row(grid, CauchyWavelet(M=M), s, ts, config=config))))) for s in scales]
    return grid, maxima


def check_lipschitz_bound(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """|W| <= bound_C s^delta (1 + tol) for tent data with gamma = 0.2."""
    fixture = tent(0.2)
    report = constants(fixture, 1.0)
    grid = _reference_grid(fixture, config)
    translations = uniform_translations(config.translation_points)
    sg = scalogram(grid, None, CauchyWavelet(M=4), dyadic_scales(3, 9), translations, config=config)
    ok, worst = verify_lip_bound(report, sg, config.lip_tolerance)
    return CheckResult(
        name="lipschitz_bound",
        passed=ok,
        value=worst,
        threshold=1.0 + config.lip_tolerance,
        detail=f"bound_C={report.bound_C:.6g}",
    )


def check_o_of_s(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Decay faster than s on a C^1 fixture; the tent slope is reported alongside."""
    fixture = smoothstep()
    w = CauchyWavelet(M=6)
    grid = _reference_grid(fixture, config)
    translations = uniform_translations(config.translation_points)
    sg = scalogram(grid, None, w, dyadic_scales(3, 10), translations, config=config)
    ok, slope = verify_o_of_s(fixture, sg, w, config)
    _, tent_maxima = _direct_maxima(tent(0.2), 4, dyadic_scales(3, 9), config)
    tent_slope, _ = fit_decay_exponent(tent_maxima[-config.fit_window :])
    return CheckResult(
        name="o_of_s",
        passed=ok,
        value=slope,
        threshold=1.0 + config.decay_margin,
        detail=f"smoothstep M=6 slope={slope:.4f}; tent gamma=0.2 M=4 slope={tent_slope:.4f} (informational)",
    )


def check_fractal_exponent(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Wavelet decay slope against the oscillation exponent for gamma = 0.6 tent data.

    Both fits use the finest ``fit_window`` dyadic levels up to 2^-10.
    """
    window = dyadic_scales(4, 10)[-config.fit_window :]
    grid, maxima = _direct_maxima(takagi(), 4, window, config)
    wavelet_slope, _ = fit_decay_exponent(maxima)
    oscillation, _ = oscillation_exponent(grid, range(11 - len(window), 11))
    gap = abs(wavelet_slope - oscillation)
    detail = f"levels {11 - len(window)}..10: wavelet={wavelet_slope:.4f} oscillation={oscillation:.4f}"
    return _result("fractal_exponent", gap, 0.1, detail)


def check_split_integral(problem: InterpolationProblem, config: AnalysisConfig) -> CheckResult:
    """Lower part of the split scale integral is negligible; upper part matches quadrature."""
    M = 4
    worst_ratio = 0.0
    worst_match = 0.0
    for p in (2, 3):
        scale = math.factorial(M - p)
        for exp in range(3, 9):
            s = 2.0**-exp
            lower, upper = split_scale_integral(M, p, s)
            _, upper_quad = split_scale_quadrature(M, p, s)
            worst_match = max(worst_match, abs(upper - upper_quad) / abs(upper_quad))
            if exp >= 5:
                worst_ratio = max(worst_ratio, lower / (s ** (p - 1) * scale))
    passed = worst_ratio <= 1e-6 and worst_match <= 1e-10
    detail = f"lower/upper ratio (s <= 2^-5)={worst_ratio:.3g} quadrature match={worst_match:.3g}"
    return CheckResult(name="split_integral", passed=passed, value=worst_ratio, threshold=1e-6, detail=detail)


CHECKS: List[Tuple[str, Check]] = [
    ("functional_equation", check_functional_equation),
    ("factorization", check_factorization),
    ("series_vs_quadrature", check_series_vs_quadrature),
    ("wavelet_pair", check_wavelet_pair),
    ("dual_path", check_dual_path),
    ("recursion_identity", check_recursion),
    ("lipschitz_bound", check_lipschitz_bound),
    ("o_of_s", check_o_of_s),
    ("fractal_exponent", check_fractal_exponent),
    ("split_integral", check_split_integral),
]


def run_acceptance(
    problem: Optional[InterpolationProblem] = None,
    config: Optional[AnalysisConfig] = None,
    only: Optional[List[str]] = None,
) -> VerificationReport:
    """Run the acceptance checks.

    Args:
        problem: Problem under test, the tent fixture by default
        config: Analysis configuration
        only: Names of the checks to run, all by default

    Returns:
        VerificationReport: One result per check
    """
    problem = problem or tent()
    config = config or AnalysisConfig()
    results = []
    for name, check in CHECKS:
        if only is not None and name not in only:
            continue
        started = time.perf_counter()
        try:
            result = check(problem, config)
        except FifWaveletError as e:
            result = CheckResult(name=name, passed=False, detail=f"{type(e).__name__}: {e.message}")
        logger.debug("[%s] passed=%s in %.2fs %s", name, result.passed, time.perf_counter() - started, result.detail)
        results.append(result)
    return VerificationReport(
        passed=all(r.passed for r in results),
        checks=results,
        provenance={"problem_sha256": problem.digest(), "seed": SEED},
    )
