"""Tests for Fourier-transform methods."""

# Import built-in modules
from typing import Any, List

# Import third-party modules
import numpy as np
import pytest

# Import local modules
from fif_wavelet import spectrum
from fif_wavelet.exceptions import DomainError, ResourceError
from fif_wavelet.fixtures import smoothstep
from fif_wavelet.methods.spectral import BruteForceMethod
from fif_wavelet.methods.spectral import LinearMethod
from fif_wavelet.methods.spectral import QuadratureMethod
from fif_wavelet.methods.spectral import SeriesMethod
from fif_wavelet.schema import InterpolationProblem
from fif_wavelet.spectrum import SpectrumEvaluator
from fif_wavelet.utils import AnalysisConfig

OMEGAS = [0.0, 0.75, 6.0, 31.0, -31.0]


def test_series_method(tent_problem: InterpolationProblem, tent_evaluator: SpectrumEvaluator) -> None:
    """Test that the method reproduces the evaluator."""
    table = SeriesMethod(tent_problem).spectrum(OMEGAS)
    values, bounds = tent_evaluator.ft_series(np.asarray(OMEGAS))
    np.testing.assert_array_equal(table.values, values)
    np.testing.assert_array_equal(table.tail_bounds, bounds)
    assert table.tail_bounds[1] == pytest.approx(tent_evaluator.tail_bound(40))


def test_series_method_truncation(tent_problem: InterpolationProblem) -> None:
    """Test that a shallow truncation carries a larger certificate."""
    shallow = SeriesMethod(tent_problem, J_trunc=5).spectrum([6.0])
    deep = SeriesMethod(tent_problem).spectrum([6.0])
    assert shallow.tail_bounds[0] > deep.tail_bounds[0]
    assert abs(shallow.values[0] - deep.values[0]) <= shallow.tail_bounds[0]


def test_brute_force_method(tent_problem: InterpolationProblem) -> None:
    """Test enumeration at depth 4 against the series."""
    omegas = [0.75, 6.0, 31.0]
    brute = BruteForceMethod(tent_problem, J_trunc=4).spectrum(omegas)
    series = SeriesMethod(tent_problem, J_trunc=4).spectrum(omegas)
    np.testing.assert_allclose(brute.values, series.values, atol=1e-12)
    np.testing.assert_array_equal(brute.tail_bounds, series.tail_bounds)


def test_brute_force_guard(tent_problem: InterpolationProblem) -> None:
    """Test the enumeration guard at the default depth."""
    with pytest.raises(ResourceError):
        BruteForceMethod(tent_problem).spectrum([1.0])


def test_linear_method(tent_problem: InterpolationProblem) -> None:
    """Test the closed form against the series."""
    linear = LinearMethod(tent_problem).spectrum(OMEGAS[1:])
    series = SeriesMethod(tent_problem).spectrum(OMEGAS[1:])
    np.testing.assert_allclose(linear.values, series.values, atol=1e-10)


def test_linear_method_rejects_curved_pieces() -> None:
    """Test that cubic pieces fail before any evaluation."""
    with pytest.raises(DomainError):
        LinearMethod(smoothstep()).spectrum([1.0])


def test_quadrature_method(tent_problem: InterpolationProblem) -> None:
    """Test grid quadrature against the series."""
    quad = QuadratureMethod(tent_problem).spectrum(OMEGAS)
    series = SeriesMethod(tent_problem).spectrum(OMEGAS)
    assert np.all(np.abs(quad.values - series.values) <= quad.tail_bounds + 1e-6)
    assert np.all(quad.tail_bounds >= 0.0)
    assert quad.method == "quad"


@pytest.mark.asyncio
async def test_series_method_samples_fallback_grid_once(
    tent_problem: InterpolationProblem, monkeypatch: pytest.MonkeyPatch
) -> None:
    """Test that threaded small-frequency chunks share one fallback grid."""
    calls: List[int] = []
    original = spectrum.sample_grid

    def counting_sample_grid(*args: Any, **kwargs: Any) -> Any:
        calls.append(1)
        return original(*args, **kwargs)

    monkeypatch.setattr(spectrum, "sample_grid", counting_sample_grid)
    method = SeriesMethod(tent_problem, AnalysisConfig(threads=4), omega_min=1.0)
    table = await method.spectrum_async(np.linspace(0.0, 0.9, 520).tolist())
    assert len(calls) == 1
    np.testing.assert_array_equal(table.values, method.spectrum(np.linspace(0.0, 0.9, 520).tolist()).values)
