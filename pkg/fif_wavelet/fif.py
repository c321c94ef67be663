"""Fractal interpolation functions on uniform knots.

The FIF of a problem satisfies, on every piece I_k = [(k-1)/N, k/N],

    f(x) = gamma_k f(L_k^-1(x)) + q_k(L_k^-1(x)),     L_k(x) = (x + k - 1) / N.

The relation is closed on N-adic grids: the level-j values follow from the level-(j-1) values
by one application per piece, which gives exact samples without fixed-point iteration.
"""

# Import built-in modules
import logging
import math
from typing import List, Optional, Tuple

# Import third-party modules
import numpy as np

# Import local modules
from fif_wavelet.exceptions import DomainError, ResourceError
from fif_wavelet.schema import FifGrid, InterpolationProblem, ValidationReport, Violation
from fif_wavelet.utils import AnalysisConfig, polyval

logger = logging.getLogger(__name__)

JOIN_TOLERANCE = 1e-12
LIPSCHITZ_SAMPLES = 1025


def map_forward(problem: InterpolationProblem, k: int, x: float) -> float:
    """Map x in [0, 1] onto piece I_k.

    Args:
        problem: Interpolation problem
        k: Piece index, 1 <= k <= N
        x: Point in [0, 1]

    Returns:
        float: L_k(x) = (x + k - 1) / N

    Raises:
        DomainError: If k or x is out of range
    """
    if not 1 <= k <= problem.N:
        raise DomainError(f"Piece index must lie in 1..{problem.N}, got {k}", parameter="k", value=k)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}", parameter="x", value=x)
    return (x + k - 1) / problem.N


def map_inverse(problem: InterpolationProblem, x: float) -> Tuple[int, float]:
    """Locate the piece containing x and the pre-image u = L_k^-1(x).

    Interior knots x = k/N resolve to the left piece, (k, 1.0).

    Args:
        problem: Interpolation problem
        x: Point in [0, 1]

    Returns:
        Tuple[int, float]: (k, u) with x = L_k(u)

    Raises:
        DomainError: If x is outside [0, 1]
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}", parameter="x", value=x)
    scaled = problem.N * x
    k = min(max(math.ceil(scaled), 1), problem.N)
    return k, min(max(scaled - (k - 1), 0.0), 1.0)


def validate(problem: InterpolationProblem) -> ValidationReport:
    """Check the interpolation, join and contractivity constraints of a problem.

    Every failed constraint is reported separately; nothing is raised.

    Args:
        problem: Structurally well-formed problem

    Returns:
        ValidationReport: Report listing all violations
    """
    violations: List[Violation] = []
    N, y = problem.N, problem.y
    scale = max(1.0, max(abs(v) for v in y))
    tol = JOIN_TOLERANCE * scale

    def check(name: str, index: Optional[int], magnitude: float) -> None:
        if magnitude > tol:
            violations.append(Violation(constraint=name, index=index, magnitude=magnitude))

    check("y_0=0", 0, abs(y[0]))
    check("y_N=0", N, abs(y[N]))
    for k, g in enumerate(problem.gamma, start=1):
        if not abs(g) < 1.0:
            violations.append(Violation(constraint="|gamma_k|<1", index=k, magnitude=abs(g)))

    sums = [math.fsum(row) for row in problem.q]
    for k, row in enumerate(problem.q, start=1):
        check("q_k(0)=y_{k-1}", k, abs(row[0] - y[k - 1]))
        check("q_k(1)=y_k", k, abs(sums[k - 1] - y[k]))
        if len(row) > 1 and row[-1] == 0.0:
            violations.append(Violation(constraint="c_{k,m_k}!=0", index=k, magnitude=0.0))

    # Pure-coefficient form of the join conditions.
    check("c_{1,0}=0", 1, abs(problem.q[0][0]))
    for k in range(1, N):
        check("sum_r c_{k,r}=c_{k+1,0}", k, abs(sums[k - 1] - problem.q[k][0]))
    check("sum_r c_{N,r}=0", N, abs(sums[N - 1]))

    report = ValidationReport.from_violations(violations)
    if not report.ok:
        logger.debug("Problem has %d violation(s): %s", len(violations), report.constraints())
    return report


def lipschitz_constant(problem: InterpolationProblem) -> Tuple[float, float]:
    """Lipschitz constant of the q_k on [0, 1].

    Args:
        problem: Interpolation problem

    Returns:
        Tuple[float, float]: (grid maximum of |q_k'| over 1025 points, certificate sum_r r|c_{k,r}|)
    """
    x = np.linspace(0.0, 1.0, LIPSCHITZ_SAMPLES)
    grid_max = 0.0
    certificate = 0.0
    for row in problem.q:
        coeffs = np.asarray(row, dtype=float)
        if coeffs.size > 1:
            derivative = coeffs[1:] * np.arange(1, coeffs.size)
            grid_max = max(grid_max, float(np.max(np.abs(polyval(derivative, x)))))
            certificate = max(certificate, float(np.sum(np.abs(derivative))))
    return grid_max, certificate


def sup_bound(problem: InterpolationProblem) -> float:
    """Certified bound on sup|f|: max_k sum_r |c_{k,r}| / (1 - max|gamma|)."""
    q_bound = max(math.fsum(abs(c) for c in row) for row in problem.q)
    return q_bound / (1.0 - problem.gamma_max)


def mean_value(problem: InterpolationProblem) -> float:
    """Exact integral of f over [0, 1], i.e. f^(0).

    Integrating the functional equation over I gives
    int f = (sum_k int q_k / N) / (1 - sum_k gamma_k / N).
    """
    N = problem.N
    moments = math.fsum(c / (r + 1) for row in problem.q for r, c in enumerate(row))
    return (moments / N) / (1.0 - math.fsum(problem.gamma) / N)


def grid_size(problem: InterpolationProblem, level: int) -> int:
    """Number of samples of the level-``level`` grid."""
    return problem.N**level + 1


def reference_level(N: int, config: Optional[AnalysisConfig] = None) -> int:
    """Smallest level with at least 2^quadrature_level intervals, capped by the memory budget."""
    config = config or AnalysisConfig()
    level = max(1, math.ceil(config.quadrature_level * math.log(2) / math.log(N) - 1e-9))
    while level > 1 and N**level + 1 > config.max_grid_points:
        level -= 1
    return level


def _check_budget(problem: InterpolationProblem, level: int, config: AnalysisConfig) -> None:
    if level < 0:
        raise DomainError(f"Grid level must be non-negative, got {level}", parameter="level", value=level)
    size = grid_size(problem, level)
    if size > config.max_grid_points:
        raise ResourceError(
            f"Level-{level} grid needs {size} samples, budget is {config.max_grid_points}",
            requested=size,
            limit=config.max_grid_points,
        )


def sample_grid(problem: InterpolationProblem, level: int, config: Optional[AnalysisConfig] = None) -> FifGrid:
    """Evaluate the FIF exactly on the level-``level`` N-adic grid.

    Args:
        problem: Valid interpolation problem
        level: Grid level J >= 0
        config: Analysis configuration (memory budget)

    Returns:
        FifGrid: f(i / N^J) for i = 0..N^J

    Raises:
        DomainError: If the level is negative
        ResourceError: If N^J + 1 exceeds the memory budget
    """
    config = config or AnalysisConfig()
    _check_budget(problem, level, config)
    N = problem.N
    knots = np.asarray(problem.y, dtype=float)
    if level == 0:
        return FifGrid(N=N, level=0, values=knots[[0, -1]])
    values = knots.copy()
    for j in range(2, level + 1):
        coarse = N ** (j - 1)
        u = np.arange(coarse + 1, dtype=float) / coarse
        fine = np.empty(N**j + 1)
        for k in range(1, N + 1):
            start = (k - 1) * coarse
            fine[start : start + coarse + 1] = problem.gamma[k - 1] * values + polyval(problem.q[k - 1], u)
        # Knots hold y exactly.
        fine[::coarse] = knots
        values = fine
        logger.debug("Sampled level %d (%d points)", j, values.size)
    return FifGrid(N=N, level=level, values=values)


def rb_iterate(problem: InterpolationProblem, g0: FifGrid, n: int) -> FifGrid:
    """Apply the Read-Bajraktarevic operator n times on a grid.

    T(g)(x) = gamma_k g(u) + q_k(u) with (k, u) = map_inverse(x). On the level-J grid the
    pre-image of index i in piece k is index N*i - (k-1)*N^J of the same grid.

    Args:
        problem: Interpolation problem
        g0: Start function on a level-J grid with g0(0) = y_0, g0(1) = y_N
        n: Number of iterations (n = 0 returns g0)

    Returns:
        FifGrid: T^n(g0)

    Raises:
        DomainError: If g0 belongs to another N, violates the endpoint values, or n < 0
    """
    if g0.N != problem.N:
        raise DomainError(f"Start grid is {g0.N}-adic, problem needs N={problem.N}", parameter="g0", value=g0.N)
    if n < 0:
        raise DomainError(f"Iteration count must be non-negative, got {n}", parameter="n", value=n)
    if g0.values[0] != problem.y[0] or g0.values[-1] != problem.y[-1]:
        raise DomainError("Start grid must take the values y_0 and y_N at the endpoints", parameter="g0")
    if n == 0:
        return g0
    if g0.level == 0:
        return g0

    N, level = problem.N, g0.level
    total = N**level
    piece = N ** (level - 1)
    sources = []
    for k in range(N, 0, -1):
        idx = np.arange((k - 1) * piece, k * piece + 1)
        src = N * idx - (k - 1) * total
        sources.append((k, idx, src, polyval(problem.q[k - 1], src / total)))

    values = np.array(g0.values, dtype=float)
    for _ in range(n):
        nxt = np.empty_like(values)
        # Descending k so the left piece wins at interior knots.
        for k, idx, src, q_values in sources:
            nxt[idx] = problem.gamma[k - 1] * values[src] + q_values
        values = nxt
    return FifGrid(N=N, level=level, values=values)


def _linear_interpolant(problem: InterpolationProblem, x: float) -> float:
    return float(np.interp(x, np.arange(problem.N + 1) / problem.N, problem.y))


def evaluate_point(problem: InterpolationProblem, x: float, depth: int) -> Tuple[float, float]:
    """Evaluate f(x) by unrolling the functional equation ``depth`` times.

    The recursion is closed with the piecewise-linear interpolant of the knot values.

    Args:
        problem: Interpolation problem
        x: Point in [0, 1]
        depth: Unrolling depth >= 0

    Returns:
        Tuple[float, float]: (value, certified sup-norm error bound)

    Raises:
        DomainError: If x is outside [0, 1] or depth is negative
    """
    if depth < 0:
        raise DomainError(f"Depth must be non-negative, got {depth}", parameter="depth", value=depth)
    value = 0.0
    weight = 1.0
    point = x
    for _ in range(depth):
        k, u = map_inverse(problem, point)
        value += weight * float(polyval(problem.q[k - 1], u))
        weight *= problem.gamma[k - 1]
        point = u
        if weight == 0.0:
            break
    if weight == 0.0:
        return value, 0.0
    value += weight * _linear_interpolant(problem, point)
    bound = problem.gamma_max**depth * (max(abs(v) for v in problem.y) + sup_bound(problem))
    return value, bound
