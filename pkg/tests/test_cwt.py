"""Tests for the continuous wavelet transform."""

# Import built-in modules
import math

# Import third-party modules
import numpy as np
import pytest
from scipy import integrate

# Import local modules
from fif_wavelet.cwt import check_scale_guard
from fif_wavelet.cwt import cwt_direct
from fif_wavelet.cwt import cwt_fourier
from fif_wavelet.cwt import cwt_q_piece
from fif_wavelet.cwt import frequency_cutoff
from fif_wavelet.cwt import gauss_panels
from fif_wavelet.cwt import recursion_residual
from fif_wavelet.cwt import scalogram
from fif_wavelet.exceptions import AccuracyError, DomainError
from fif_wavelet.fif import sample_grid
from fif_wavelet.fixtures import tent
from fif_wavelet.schema import FifGrid, InterpolationProblem
from fif_wavelet.spectrum import SpectrumEvaluator
from fif_wavelet.utils import AnalysisConfig, dyadic_scales, max_relative_deviation, uniform_translations
from fif_wavelet.wavelets import CauchyWavelet


def test_gauss_panels() -> None:
    """Test that panel rules integrate polynomials exactly."""
    nodes, weights = gauss_panels(3.0, 0.7, 8)
    assert nodes.size == 5 * 8
    assert np.sum(weights) == pytest.approx(3.0, rel=1e-14)
    assert np.sum(weights * nodes**5) == pytest.approx(3.0**6 / 6.0, rel=1e-13)
    assert np.all((nodes > 0.0) & (nodes < 3.0))


def test_frequency_cutoff(wavelet: CauchyWavelet, analysis_config: AnalysisConfig) -> None:
    """Test that the dropped wavelet tail has the configured relative size."""
    upper = frequency_cutoff(wavelet, analysis_config)
    tail, _ = integrate.quad(wavelet.hat, upper, np.inf, epsabs=0.0, epsrel=1e-10)
    assert tail / math.factorial(4) == pytest.approx(analysis_config.wavelet_tail_tol, rel=1e-3)


def test_scale_guard(tent_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test the resolution guard of the direct transform."""
    grid = sample_grid(tent_problem, 10)
    check_scale_guard(grid, 8.0 / 1024)
    with pytest.raises(AccuracyError) as exc_info:
        cwt_direct(grid, wavelet, 4.0 / 1024, 0.5)
    assert exc_info.value.guard == "scale"
    with pytest.raises(DomainError):
        cwt_direct(grid, wavelet, -0.1, 0.5)


def test_direct_zero_signal(zero_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test that f = 0 transforms to 0."""
    grid = sample_grid(zero_problem, 12)
    assert cwt_direct(grid, wavelet, 2.0**-4, 0.3) == 0


def test_dual_path_point(tent_grid: FifGrid, tent_evaluator: SpectrumEvaluator, wavelet: CauchyWavelet) -> None:
    """Test direct against Fourier-domain evaluation at one point."""
    direct = cwt_direct(tent_grid, wavelet, 2.0**-4, 0.5)
    fourier = cwt_fourier(tent_evaluator, wavelet, 2.0**-4, 0.5)
    assert abs(direct - fourier) <= 1e-3 * abs(fourier)


def test_dual_path_grid(tent_grid: FifGrid, tent_evaluator: SpectrumEvaluator, wavelet: CauchyWavelet) -> None:
    """Test direct against Fourier-domain scalograms on a 5 x 9 grid."""
    scales = dyadic_scales(3, 7)
    translations = uniform_translations(9)
    direct = scalogram(tent_grid, None, wavelet, scales, translations, "direct")
    fourier = scalogram(None, tent_evaluator, wavelet, scales, translations, "fourier")
    assert max_relative_deviation(direct.values, fourier.values) <= 1e-3


def test_unconjugated_variant(tent_grid: FifGrid, tent_evaluator: SpectrumEvaluator, wavelet: CauchyWavelet) -> None:
    """Test that for real f the unconjugated transform is the conjugate of the default one."""
    s, t = 2.0**-4, 0.3
    direct = cwt_direct(tent_grid, wavelet, s, t)
    assert cwt_direct(tent_grid, wavelet, s, t, conjugate=False) == pytest.approx(direct.conjugate(), abs=1e-15)
    fourier = cwt_fourier(tent_evaluator, wavelet, s, t)
    unconjugated = cwt_fourier(tent_evaluator, wavelet, s, t, conjugate=False)
    assert unconjugated == pytest.approx(fourier.conjugate(), abs=1e-12)


def test_outside_support(tent_grid: FifGrid, tent_evaluator: SpectrumEvaluator, wavelet: CauchyWavelet) -> None:
    """Test translations outside [0, 1] on both paths."""
    direct = cwt_direct(tent_grid, wavelet, 2.0**-3, 1.5)
    fourier = cwt_fourier(tent_evaluator, wavelet, 2.0**-3, 1.5)
    assert abs(direct - fourier) <= 1e-3 * max(abs(fourier), 1e-12) + 1e-9


def test_large_scale_bound(tent_evaluator: SpectrumEvaluator, wavelet: CauchyWavelet) -> None:
    """Test |W(s, t)| <= max|f^| M! / (2 pi s) at coarse scales."""
    value = cwt_fourier(tent_evaluator, wavelet, 4.0, 0.5)
    assert abs(value) <= (0.5 / 0.7) * 24.0 / (2.0 * math.pi * 4.0)


def test_linearity(tent_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test W(f + g) = W f + W g for sampled signals."""
    f = sample_grid(tent_problem, 12)
    g = sample_grid(tent(0.1), 12)
    total = FifGrid(N=2, level=12, values=f.values + g.values)
    s, t = 2.0**-5, 0.4
    expected = cwt_direct(f, wavelet, s, t) + cwt_direct(g, wavelet, s, t)
    assert cwt_direct(total, wavelet, s, t) == pytest.approx(expected, abs=1e-13)


def test_q_piece_zero(zero_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test that vanishing pieces transform to 0."""
    assert cwt_q_piece(zero_problem, 1, wavelet, 0.1, 0.2) == 0


def test_q_piece_definition(tent_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test the first tent piece against adaptive quadrature of x -> 2x on [0, 1/2]."""
    s, t = 2.0**-4, 0.3

    def integrand(x: float) -> complex:
        return 2.0 * x * np.conj(wavelet.time((x - t) / s)) / s

    real, _ = integrate.quad(lambda x: integrand(x).real, 0.0, 0.5, limit=200, epsabs=1e-13)
    imag, _ = integrate.quad(lambda x: integrand(x).imag, 0.0, 0.5, limit=200, epsabs=1e-13)
    assert cwt_q_piece(tent_problem, 1, wavelet, s, t) == pytest.approx(complex(real, imag), abs=1e-10)


def test_q_piece_index(tent_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test the piece-index check."""
    with pytest.raises(DomainError):
        cwt_q_piece(tent_problem, 3, wavelet, 0.1, 0.2)


def test_recursion_identity(tent_grid: FifGrid, tent_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test the one-step scale recursion."""
    assert recursion_residual(tent_grid, tent_problem, wavelet, 2.0**-5, 0.3) <= 1e-5


@pytest.mark.parametrize("depth", [2, 3])
def test_recursion_identity_deeper(
    tent_grid: FifGrid, tent_problem: InterpolationProblem, wavelet: CauchyWavelet, depth: int
) -> None:
    """Test the expanded recursion at several depths."""
    assert recursion_residual(tent_grid, tent_problem, wavelet, 2.0**-6, 0.4, depth=depth) <= 1e-5


def test_recursion_without_scaling(wavelet: CauchyWavelet) -> None:
    """Test that gamma = 0 leaves only the piece transforms."""
    problem = tent(0.0)
    grid = sample_grid(problem, 16)
    assert recursion_residual(grid, problem, wavelet, 2.0**-5, 0.3) <= 1e-8


def test_recursion_zero_signal(zero_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test that f = 0 has zero residual."""
    grid = sample_grid(zero_problem, 12)
    assert recursion_residual(grid, zero_problem, wavelet, 2.0**-5, 0.3) == 0.0


def test_recursion_depth_guard(tent_grid: FifGrid, tent_problem: InterpolationProblem, wavelet: CauchyWavelet) -> None:
    """Test the recursion depth limits."""
    for depth in (0, 5):
        with pytest.raises(DomainError):
            recursion_residual(tent_grid, tent_problem, wavelet, 2.0**-5, 0.3, depth=depth)


def test_scalogram_shapes(tent_grid: FifGrid, wavelet: CauchyWavelet) -> None:
    """Test scalogram layout and metadata."""
    grid = scalogram(tent_grid, None, wavelet, [2.0**-4], [0.25])
    assert grid.values.shape == (1, 1)
    assert grid.values[0, 0] == cwt_direct(tent_grid, wavelet, 2.0**-4, 0.25)
    assert grid.method == "direct"
    assert grid.signal_level == 16
    assert grid.wavelet_order == 4
    empty = scalogram(tent_grid, None, wavelet, [], [0.1, 0.2])
    assert empty.values.shape == (0, 2)


def test_scalogram_requires_inputs(tent_grid: FifGrid, wavelet: CauchyWavelet) -> None:
    """Test that each method needs its signal representation."""
    with pytest.raises(DomainError):
        scalogram(tent_grid, None, wavelet, [0.1], [0.5], "fourier")
    with pytest.raises(DomainError):
        scalogram(None, None, wavelet, [0.1], [0.5], "direct")
    with pytest.raises(ValueError):
        scalogram(tent_grid, None, wavelet, [0.1], [0.5], "wavelet-packet")
