"""Continuous wavelet transform methods."""

# Import built-in modules
from typing import Optional, Sequence

# Import third-party modules
import numpy as np

# Import local modules
from fif_wavelet.components import BaseWaveletMethod
from fif_wavelet.cwt import direct_row, fourier_row
from fif_wavelet.schema import WaveletMethodName


class DirectMethod(BaseWaveletMethod):
    """Simpson quadrature against the sampled signal."""

    name = WaveletMethodName.DIRECT.value

    @property
    def signal_level(self) -> Optional[int]:
        return self._level

    def prepare(self) -> None:
        _ = self.grid

    def row(self, s: float, translations: Sequence[float]) -> np.ndarray:
        return direct_row(self.grid, self._wavelet, s, translations, self._conjugate, self._config)


class FourierMethod(BaseWaveletMethod):
    """Gauss-Legendre quadrature of the Fourier-domain formula, f^ from the series."""

    name = WaveletMethodName.FOURIER.value

    def prepare(self) -> None:
        _ = self.evaluator

    def row(self, s: float, translations: Sequence[float]) -> np.ndarray:
        return fourier_row(self.evaluator, self._wavelet, s, translations, self._conjugate, self._config)
