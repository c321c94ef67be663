"""
fif-wavelet - Fractal interpolation functions, their spectra and wavelet transforms."""

__version__ = "0.1.0"

# Import local modules
from fif_wavelet.components import BaseSpectrumMethod, BaseTransform, BaseWaveletMethod
from fif_wavelet.core import FifAnalyzer
from fif_wavelet.cwt import cwt_direct, cwt_fourier, cwt_q_piece, recursion_residual, scalogram

# Import exceptions
from fif_wavelet.exceptions import (
    AccuracyError,
    ConfigurationError,
    DomainError,
    FifWaveletError,
    NoSuchMethodError,
    PluginError,
    PreconditionError,
    ResourceError,
    ValidationError,
)
from fif_wavelet.factory import MethodFactory
from fif_wavelet.fif import evaluate_point, map_forward, map_inverse, rb_iterate, sample_grid, validate
from fif_wavelet.regularity import constants, fit_decay_exponent, verify_lip_bound, verify_o_of_s
from fif_wavelet.schema import (
    FifGrid,
    InterpolationProblem,
    RegularityReport,
    ScalogramGrid,
    SpectrumTable,
    ValidationReport,
)
from fif_wavelet.spectrum import SpectrumEvaluator, ft_quadrature, poly_moment
from fif_wavelet.utils import AnalysisConfig
from fif_wavelet.wavelets import CauchyWavelet, wavelet_hat, wavelet_time

__all__ = [
    "FifAnalyzer",
    "MethodFactory",
    "AnalysisConfig",
    "BaseTransform",
    "BaseSpectrumMethod",
    "BaseWaveletMethod",
    "InterpolationProblem",
    "FifGrid",
    "ValidationReport",
    "SpectrumTable",
    "ScalogramGrid",
    "RegularityReport",
    "SpectrumEvaluator",
    "CauchyWavelet",
    "map_forward",
    "map_inverse",
    "validate",
    "sample_grid",
    "rb_iterate",
    "evaluate_point",
    "poly_moment",
    "ft_quadrature",
    "wavelet_hat",
    "wavelet_time",
    "cwt_direct",
    "cwt_fourier",
    "cwt_q_piece",
    "recursion_residual",
    "scalogram",
    "constants",
    "verify_lip_bound",
    "fit_decay_exponent",
    "verify_o_of_s",
    "FifWaveletError",
    "ValidationError",
    "ConfigurationError",
    "DomainError",
    "ResourceError",
    "AccuracyError",
    "PreconditionError",
    "NoSuchMethodError",
    "PluginError",
]
