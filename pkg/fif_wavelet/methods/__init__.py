"""Transform method implementations."""

# Import local modules
from fif_wavelet.methods.spectral import BruteForceMethod, LinearMethod, QuadratureMethod, SeriesMethod
from fif_wavelet.methods.wavelet import DirectMethod, FourierMethod

__all__ = [
    "SeriesMethod",
    "BruteForceMethod",
    "LinearMethod",
    "QuadratureMethod",
    "DirectMethod",
    "FourierMethod",
]
