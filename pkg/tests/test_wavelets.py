"""Tests for the Cauchy wavelet pair."""

# Import built-in modules
import math

# Import third-party modules
import numpy as np
from pydantic import ValidationError as PydanticValidationError
import pytest
from scipy import integrate

# Import local modules
from fif_wavelet.acceptance import wavelet_integral
from fif_wavelet.wavelets import CauchyWavelet, wavelet_hat, wavelet_time


def test_hat_values() -> None:
    """Test psi^ on both sides of the origin."""
    w = CauchyWavelet(M=4)
    assert wavelet_hat(w, 0.0) == 0.0
    assert wavelet_hat(w, -1.0) == 0.0
    assert wavelet_hat(w, 4.0) == pytest.approx(256.0 * math.exp(-4.0), rel=1e-14)
    assert wavelet_hat(w, 1e3) == 0.0


def test_hat_vectorized() -> None:
    """Test array evaluation of psi^."""
    values = CauchyWavelet(M=2).hat(np.array([-2.0, 0.0, 1.0]))
    np.testing.assert_allclose(values, [0.0, 0.0, math.exp(-1.0)])


def test_time_at_origin() -> None:
    """Test psi(0) = M! / (2 pi)."""
    assert wavelet_time(CauchyWavelet(M=2), 0.0) == pytest.approx(1.0 / math.pi)
    assert CauchyWavelet(M=4).norm == pytest.approx(24.0 / (2.0 * math.pi))


@pytest.mark.parametrize("M", [2, 3, 4, 6])
@pytest.mark.parametrize("x", [-6.5, -1.0, 0.3, 2.0, 8.0])
def test_inverse_transform(M: int, x: float) -> None:
    """Test psi against the inverse Fourier transform of psi^."""
    w = CauchyWavelet(M=M)
    options = {"weight": "cos", "wvar": x, "limit": 200, "epsabs": 1e-13}
    real, _ = integrate.quad(w.hat, 0.0, np.inf, **options)
    options["weight"] = "sin"
    imag, _ = integrate.quad(w.hat, 0.0, np.inf, **options)
    expected = complex(real, imag) / (2.0 * math.pi)
    assert abs(w.time(x) - expected) <= 1e-8


def test_time_decay() -> None:
    """Test |psi(x)| |x|^(M+1) -> M! / (2 pi)."""
    w = CauchyWavelet(M=4)
    assert abs(w.time(1e3)) * 1e3**5 == pytest.approx(w.norm, rel=1e-5)


@pytest.mark.parametrize("M", [2, 4])
def test_zero_mean(M: int) -> None:
    """Test int psi = 0."""
    assert abs(wavelet_integral(CauchyWavelet(M=M))) <= 1e-8


def test_low_frequency_behaviour() -> None:
    """Test psi^(w) / w^M -> 1 as w -> 0."""
    w = CauchyWavelet(M=4)
    small = 2.0 ** -np.arange(10, 21)
    assert np.max(np.abs(w.hat(small) / small**4 - 1.0)) <= 1e-3


def test_order_validation() -> None:
    """Test that orders below 2 are rejected."""
    assert CauchyWavelet().M == 4
    assert CauchyWavelet(M=5).r == 5
    with pytest.raises(PydanticValidationError):
        CauchyWavelet(M=1)
