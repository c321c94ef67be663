"""Test fixtures and utilities for fif-wavelet tests."""

# Import built-in modules
import json
from pathlib import Path
from typing import Any, Dict

# Import third-party modules
import pytest

# Import local modules
from fif_wavelet.fif import sample_grid
from fif_wavelet.fixtures import smoothstep, takagi, tent, zero
from fif_wavelet.schema import FifGrid, InterpolationProblem
from fif_wavelet.spectrum import SpectrumEvaluator
from fif_wavelet.utils import AnalysisConfig
from fif_wavelet.wavelets import CauchyWavelet


TENT_DATA: Dict[str, Any] = {
    "N": 2,
    "y": [0.0, 1.0, 0.0],
    "gamma": [0.3, 0.3],
    "q": [[0.0, 1.0], [1.0, -1.0]],
    "delta": 1.0,
}


@pytest.fixture
def tent_data() -> Dict[str, Any]:
    """Raw definition of the tent problem."""
    return json.loads(json.dumps(TENT_DATA))


@pytest.fixture
def tent_problem() -> InterpolationProblem:
    """Tent data with gamma = 0.3."""
    return tent()


@pytest.fixture
def tent02_problem() -> InterpolationProblem:
    """Tent data with gamma = 0.2, inside the Lipschitz-bound regime."""
    return tent(0.2)


@pytest.fixture
def takagi_problem() -> InterpolationProblem:
    """Tent data with gamma = 0.6."""
    return takagi()


@pytest.fixture
def smooth_problem() -> InterpolationProblem:
    """C^1 smoothstep bump with gamma = 0.05."""
    return smoothstep()


@pytest.fixture
def zero_problem() -> InterpolationProblem:
    """Problem whose FIF vanishes identically."""
    return zero()


@pytest.fixture
def analysis_config() -> AnalysisConfig:
    """Default analysis configuration."""
    return AnalysisConfig()


@pytest.fixture
def wavelet() -> CauchyWavelet:
    """Order-4 Cauchy wavelet."""
    return CauchyWavelet(M=4)


@pytest.fixture(scope="session")
def tent_grid() -> FifGrid:
    """Level-16 samples of the tent FIF."""
    return sample_grid(tent(), 16)


@pytest.fixture(scope="session")
def tent02_grid() -> FifGrid:
    """Level-16 samples of the gamma = 0.2 tent FIF."""
    return sample_grid(tent(0.2), 16)


@pytest.fixture(scope="session")
def tent_evaluator() -> SpectrumEvaluator:
    """Series evaluator of the tent FIF."""
    return SpectrumEvaluator(tent(), J_trunc=40)


@pytest.fixture
def problem_file(tmp_path: Path, tent_data: Dict[str, Any]) -> Path:
    """Tent problem written to a JSON file."""
    path = tmp_path / "tent.json"
    path.write_text(json.dumps(tent_data), encoding="utf-8")
    return path
