"""Named reference problems."""

# Import built-in modules
from typing import Callable, Dict, List

# Import third-party modules
import numpy as np

# Import local modules
from fif_wavelet.exceptions import ConfigurationError
from fif_wavelet.schema import InterpolationProblem


def tent(gamma: float = 0.3, delta: float = 1.0) -> InterpolationProblem:
    """Tent data y = (0, 1, 0) on two pieces with q_1 = x, q_2 = 1 - x."""
    return InterpolationProblem(N=2, y=[0.0, 1.0, 0.0], gamma=[gamma, gamma], q=[[0.0, 1.0], [1.0, -1.0]], delta=delta)


def takagi() -> InterpolationProblem:
    """Tent data with gamma = 0.6, a nowhere-differentiable curve of Hoelder exponent -log2(0.6)."""
    return tent(0.6)


def smoothstep(gamma: float = 0.05) -> InterpolationProblem:
    """C^1 bump: q_1 = 3x^2 - 2x^3, q_2 = 1 - 3x^2 + 2x^3, flat at 0, 1/2 and 1."""
    return InterpolationProblem(
        N=2,
        y=[0.0, 1.0, 0.0],
        gamma=[gamma, gamma],
        q=[[0.0, 0.0, 3.0, -2.0], [1.0, 0.0, -3.0, 2.0]],
    )


def zero(N: int = 2, gamma: float = 0.3) -> InterpolationProblem:
    """All q_k = 0, whose FIF is identically zero."""
    return InterpolationProblem(N=N, y=[0.0] * (N + 1), gamma=[gamma] * N, q=[[0.0] for _ in range(N)])


def random_problem(
    rng: np.random.Generator, N: int, max_degree: int = 3, gamma_bound: float = 0.45
) -> InterpolationProblem:
    """Random admissible problem: random knot values, gammas and pieces of degree 1..max_degree.

    The leading coefficient of every piece is solved from q_k(1) = y_k.
    """
    y = [0.0, *rng.uniform(-1.0, 1.0, N - 1).tolist(), 0.0]
    gamma = rng.uniform(-gamma_bound, gamma_bound, N).tolist()
    q = []
    for k in range(1, N + 1):
        degree = int(rng.integers(1, max_degree + 1))
        inner = rng.uniform(-1.0, 1.0, degree - 1).tolist()
        lead = y[k] - y[k - 1] - sum(inner)
        q.append([y[k - 1], *inner, lead])
    return InterpolationProblem(N=N, y=y, gamma=gamma, q=q)


FIXTURES: Dict[str, Callable[[], InterpolationProblem]] = {
    "tent": tent,
    "tent-0.2": lambda: tent(0.2),
    "takagi": takagi,
    "smoothstep": smoothstep,
    "zero": zero,
}


def fixture_names() -> List[str]:
    """Names accepted by :func:`get_fixture`."""
    return sorted(FIXTURES)


def get_fixture(name: str) -> InterpolationProblem:
    """Build a named reference problem.

    Raises:
        ConfigurationError: If the name is unknown
    """
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ConfigurationError(
            f"Unknown fixture {name!r}, choose from {', '.join(fixture_names())}",
            config_key="fixture",
            config_value=name,
        )
