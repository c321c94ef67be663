"""Cauchy-type analysing wavelets.

psi^(w) = w^M e^{-w} on w > 0 and 0 elsewhere, whose inverse transform is
psi(x) = M! / (2 pi) (1 - ix)^{-(M+1)}. The family has M vanishing moments.
"""

# Import built-in modules
import math
from typing import Union

# Import third-party modules
import numpy as np
from pydantic import Field

# Import local modules
from fif_wavelet.schema import BaseSchema
from fif_wavelet.utils import ArrayLike


class CauchyWavelet(BaseSchema):
    """Analytic wavelet pair of order M.

    Attributes:
        M: Frequency-domain polynomial power, M >= 2
    """

    M: int = Field(4, ge=2, description="Wavelet order")

    @property
    def r(self) -> int:
        """Vanishing-moment order, identically M for this family."""
        return self.M

    @property
    def norm(self) -> float:
        """M! / (2 pi), the value psi(0)."""
        return math.factorial(self.M) / (2.0 * math.pi)

    def hat(self, omega: ArrayLike) -> Union[float, np.ndarray]:
        """psi^(w), real and supported on w > 0."""
        w = np.asarray(omega, dtype=float)
        positive = np.where(w > 0.0, w, 0.0)
        result = np.where(w > 0.0, positive**self.M * np.exp(-positive), 0.0)
        return float(result) if w.ndim == 0 else result

    def time(self, x: ArrayLike) -> Union[complex, np.ndarray]:
        """psi(x) = M! / (2 pi) (1 - ix)^{-(M+1)}."""
        z = np.asarray(x, dtype=float)
        base = 1.0 / (1.0 - 1j * z)
        result = self.norm * base ** (self.M + 1)
        return complex(result) if z.ndim == 0 else result


def wavelet_hat(w: CauchyWavelet, omega: ArrayLike) -> Union[float, np.ndarray]:
    """Evaluate psi^ of ``w`` at ``omega``; 0 for omega <= 0."""
    return w.hat(omega)


def wavelet_time(w: CauchyWavelet, x: ArrayLike) -> Union[complex, np.ndarray]:
    """Evaluate the time-domain wavelet psi of ``w`` at ``x``."""
    return w.time(x)
