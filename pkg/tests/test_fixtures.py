"""Tests for the named reference problems."""

# Import third-party modules
import numpy as np
import pytest

# Import local modules
from fif_wavelet.exceptions import ConfigurationError
from fif_wavelet.fif import validate
from fif_wavelet.fixtures import fixture_names
from fif_wavelet.fixtures import get_fixture
from fif_wavelet.fixtures import random_problem
from fif_wavelet.fixtures import zero


@pytest.mark.parametrize("name", fixture_names())
def test_fixtures_are_admissible(name: str) -> None:
    """Test that every named fixture passes validation."""
    assert validate(get_fixture(name)).ok


def test_fixture_names() -> None:
    """Test the registered names."""
    assert fixture_names() == ["smoothstep", "takagi", "tent", "tent-0.2", "zero"]
    assert get_fixture("tent-0.2").gamma == [0.2, 0.2]


def test_unknown_fixture() -> None:
    """Test that unknown names are configuration errors."""
    with pytest.raises(ConfigurationError) as exc_info:
        get_fixture("weierstrass")
    assert exc_info.value.config_key == "fixture"
    assert "tent" in exc_info.value.message


def test_zero_fixture() -> None:
    """Test the vanishing problem for several N."""
    problem = zero(N=4)
    assert problem.is_zero
    assert problem.y == [0.0] * 5


@pytest.mark.parametrize("N", [2, 3, 5])
def test_random_problem(N: int) -> None:
    """Test that random problems are admissible and reproducible."""
    first = random_problem(np.random.default_rng(11), N)
    second = random_problem(np.random.default_rng(11), N)
    assert first == second
    assert validate(first).ok
    assert first.max_degree <= 3
    assert first.gamma_max < 0.45
