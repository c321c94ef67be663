"""Type definitions for fif-wavelet.

This module contains the domain schemas shared by the sampling, spectrum, wavelet and
regularity modules.
"""

# Import built-in modules
from enum import Enum
import hashlib
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

# Import third-party modules
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError
from pydantic import field_validator, model_validator

# Import local modules
from fif_wavelet.exceptions import ValidationError


class TransformKind(str, Enum):
    """Families of transform methods."""

    SPECTRUM = "spectrum"
    WAVELET = "wavelet"


class SpectrumMethodName(str, Enum):
    """Fourier-transform evaluation methods."""

    SERIES = "series"
    BRUTE = "brute"
    LINEAR = "linear"
    QUAD = "quad"


class WaveletMethodName(str, Enum):
    """Continuous wavelet transform evaluation methods."""

    DIRECT = "direct"
    FOURIER = "fourier"


class BaseSchema(BaseModel):
    """Base schema for all fif-wavelet models.

    Models are immutable once built; every operation is a pure function of them.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    def to_payload(self) -> Dict[str, Any]:
        """Convert schema to a JSON-compatible payload.

        Returns:
            Dict[str, Any]: Payload data.
        """
        return dict(self.model_dump(mode="json", exclude_none=True))


class InterpolationProblem(BaseSchema):
    """Interpolation data and free parameters of a fractal interpolation function.

    Knots are uniform, x_i = i/N. Piece k (1-based) carries the vertical scaling factor
    ``gamma[k-1]`` and the polynomial ``q[k-1]`` given by ascending coefficients.
    Structural consistency is enforced here; the interpolation and contractivity constraints
    are reported by :func:`fif_wavelet.fif.validate`.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    N: int = Field(..., ge=2, description="Number of subintervals")
    y: List[float] = Field(..., description="Values y_0..y_N at the knots i/N")
    gamma: List[float] = Field(..., description="Vertical scaling factors gamma_1..gamma_N")
    q: List[List[float]] = Field(..., description="Ascending polynomial coefficients of q_1..q_N")
    delta: float = Field(1.0, gt=0.0, le=1.0, description="Lipschitz order used for bound checks")

    @model_validator(mode="after")
    def check_shapes(self) -> "InterpolationProblem":
        """Check that all per-knot and per-piece vectors have matching lengths."""
        if len(self.y) != self.N + 1:
            raise ValueError(f"y must have N+1={self.N + 1} entries, got {len(self.y)}")
        if len(self.gamma) != self.N:
            raise ValueError(f"gamma must have N={self.N} entries, got {len(self.gamma)}")
        if len(self.q) != self.N:
            raise ValueError(f"q must have N={self.N} rows, got {len(self.q)}")
        for k, row in enumerate(self.q, start=1):
            if not row:
                raise ValueError(f"q_{k} has no coefficients")
        values = [*self.y, *self.gamma, *(c for row in self.q for c in row)]
        if not all(math.isfinite(v) for v in values):
            raise ValueError("all values must be finite")
        return self

    @property
    def degrees(self) -> List[int]:
        """Nominal degrees m_k of the pieces."""
        return [len(row) - 1 for row in self.q]

    @property
    def max_degree(self) -> int:
        """m = max_k m_k."""
        return max(self.degrees)

    @property
    def gamma_max(self) -> float:
        """max_k |gamma_k|."""
        return max(abs(g) for g in self.gamma)

    @property
    def is_zero(self) -> bool:
        """True when every q_k vanishes, so the attractor is f = 0."""
        return all(c == 0.0 for row in self.q for c in row)

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form, used as report provenance."""
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: str = "problem") -> "InterpolationProblem":
        """Validate a problem definition.

        Args:
            data: Problem definition
            source: Name used in error messages

        Returns:
            InterpolationProblem: Validated problem

        Raises:
            ValidationError: If the definition is malformed
        """
        try:
            return cls.model_validate(data)
        except PydanticValidationError as e:
            raise ValidationError.from_pydantic(e, source=source)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "InterpolationProblem":
        """Load a problem definition file.

        Args:
            path: Path of a JSON file {"N", "y", "gamma", "q", "delta"}

        Returns:
            InterpolationProblem: Validated problem

        Raises:
            ValidationError: If the file is missing, unreadable or malformed
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ValidationError(f"Cannot read problem file {path}: {e.strerror or e}", data={"path": str(path)})
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError.from_json_error(e, source=str(path))
        if not isinstance(data, dict):
            raise ValidationError(f"Problem file {path} must contain a JSON object", data={"path": str(path)})
        return cls.from_dict(data, source=str(path))


class FifGrid(BaseSchema):
    """Values of a function on the level-J N-adic grid i/N^J, i = 0..N^J."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    N: int = Field(..., ge=2)
    level: int = Field(..., ge=0)
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v: Any) -> np.ndarray:
        """Store values as a read-only float64 array."""
        array = np.array(v, dtype=float)
        if array.ndim != 1:
            raise ValueError("values must be one-dimensional")
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def check_length(self) -> "FifGrid":
        """Check that the grid has N^level + 1 samples."""
        expected = self.N**self.level + 1
        if self.values.shape[0] != expected:
            raise ValueError(f"level-{self.level} grid needs {expected} values, got {self.values.shape[0]}")
        return self

    @property
    def intervals(self) -> int:
        """Number of grid intervals N^J."""
        return self.N**self.level

    @property
    def spacing(self) -> float:
        """Grid spacing N^-J."""
        return 1.0 / self.intervals

    @property
    def x(self) -> np.ndarray:
        """Grid abscissae i/N^J."""
        return np.arange(self.intervals + 1, dtype=float) / self.intervals

    @property
    def knot_indices(self) -> np.ndarray:
        """Indices of the knots i/N inside the grid (level >= 1)."""
        step = self.N ** (self.level - 1) if self.level >= 1 else 0
        return np.arange(self.N + 1) * step if step else np.array([0], dtype=int)

    def restrict(self, level: int) -> "FifGrid":
        """Return the sub-grid of a coarser level.

        Args:
            level: Target level, 0 <= level <= self.level

        Returns:
            FifGrid: The restricted grid
        """
        if not 0 <= level <= self.level:
            raise ValueError(f"cannot restrict level-{self.level} grid to level {level}")
        stride = self.N ** (self.level - level)
        return FifGrid(N=self.N, level=level, values=self.values[::stride])

    def to_rows(self) -> List[Tuple[float, float]]:
        """Return (x, f) pairs."""
        return list(zip(self.x.tolist(), self.values.tolist()))


class Violation(BaseSchema):
    """A single failed constraint of an interpolation problem."""

    constraint: str = Field(..., description="Constraint name")
    index: Optional[int] = Field(None, description="Offending piece or knot index (1-based pieces)")
    magnitude: float = Field(..., description="Size of the violation")


class ValidationReport(BaseSchema):
    """Outcome of validating an interpolation problem."""

    ok: bool
    violations: List[Violation] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_consistency(self) -> "ValidationReport":
        """ok must hold exactly when there are no violations."""
        if self.ok != (not self.violations):
            raise ValueError("ok must be true exactly when violations is empty")
        return self

    @classmethod
    def from_violations(cls, violations: List[Violation]) -> "ValidationReport":
        """Build a report from a list of violations."""
        return cls(ok=not violations, violations=violations)

    def constraints(self) -> List[str]:
        """Names of the violated constraints."""
        return [v.constraint for v in self.violations]


class SpectrumTable(BaseSchema):
    """Fourier transform samples f^(omega) with their tail certificates."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    method: str
    omegas: np.ndarray
    values: np.ndarray
    tail_bounds: np.ndarray

    @model_validator(mode="after")
    def check_shapes(self) -> "SpectrumTable":
        """All columns must have the same length."""
        if not (self.omegas.shape == self.values.shape == self.tail_bounds.shape):
            raise ValueError("omegas, values and tail_bounds must have the same shape")
        return self

    def to_rows(self) -> List[Tuple[float, float, float, float, float]]:
        """Return (omega, re, im, abs, tail_bound) rows."""
        return [
            (float(w), float(v.real), float(v.imag), float(abs(v)), float(tb))
            for w, v, tb in zip(self.omegas, self.values, self.tail_bounds)
        ]


class ScalogramGrid(BaseSchema):
    """Continuous wavelet transform values over scales x translations."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scales: List[float]
    translations: List[float]
    values: np.ndarray
    method: str
    wavelet_order: int = Field(..., ge=1)
    conjugate: bool = True
    signal_level: Optional[int] = None

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v: Any) -> np.ndarray:
        """Store values as a read-only complex array."""
        array = np.array(v, dtype=complex)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def check_grid(self) -> "ScalogramGrid":
        """Scales strictly decreasing and positive, values finite and shaped (scales, translations)."""
        if any(s <= 0 for s in self.scales):
            raise ValueError("scales must be positive")
        if any(a <= b for a, b in zip(self.scales, self.scales[1:])):
            raise ValueError("scales must be strictly decreasing")
        expected = (len(self.scales), len(self.translations))
        if self.values.shape != expected:
            raise ValueError(f"values must have shape {expected}, got {self.values.shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("scalogram entries must be finite")
        return self

    @property
    def magnitude(self) -> np.ndarray:
        """|W(s, t)|."""
        return np.abs(self.values)

    def per_scale_max(self) -> List[Tuple[float, float]]:
        """Return (s, max_t |W(s, t)|) for every scale."""
        if not self.translations:
            return [(s, 0.0) for s in self.scales]
        return [(s, float(m)) for s, m in zip(self.scales, self.magnitude.max(axis=1))]

    def to_rows(self) -> List[Tuple[float, float, float, float, float]]:
        """Return (s, t, re, im, abs) rows, scale-major."""
        rows = []
        for i, s in enumerate(self.scales):
            for j, t in enumerate(self.translations):
                value = self.values[i, j]
                rows.append((s, t, float(value.real), float(value.imag), float(abs(value))))
        return rows


class RegularityReport(BaseSchema):
    """Decay constants, bound checks and fitted exponents for one problem."""

    delta: float
    K: float = Field(..., description="Lipschitz constant of the q_k (grid maximum of |q_k'|)")
    K_certificate: float = Field(..., description="Coefficient-sum upper bound sum_r r|c_{k,r}|")
    K_star: float = Field(..., description="K * N^delta")
    Omega: float = Field(..., description="N^delta * max_k |gamma_k|")
    N_Omega: float = Field(..., description="N * Omega")
    bound_C: Optional[float] = Field(None, description="N K* / (1 - N Omega); None when N Omega >= 1")
    bound_finite: bool
    hypothesis_ok: bool = Field(..., description="|gamma_k| < 1/N^(delta+1) for all k")
    smoothness_hypothesis_ok: bool = Field(..., description="|gamma_k| < 1/N^(m+1) for all k")
    fitted_exponent: Optional[float] = None
    fit_residual: Optional[float] = None
    window_stability: Optional[float] = None
    per_scale_max: List[Tuple[float, float]] = Field(default_factory=list)
    lip_bound_ok: Optional[bool] = None
    worst_ratio: Optional[float] = None
    provenance: Dict[str, Any] = Field(default_factory=dict)


class CheckResult(BaseSchema):
    """Outcome of one acceptance check."""

    name: str
    passed: bool
    value: Optional[float] = None
    threshold: Optional[float] = None
    detail: str = ""


class VerificationReport(BaseSchema):
    """Aggregate of acceptance checks."""

    passed: bool
    checks: List[CheckResult] = Field(default_factory=list)
    provenance: Dict[str, Any] = Field(default_factory=dict)
