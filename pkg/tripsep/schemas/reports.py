"""
Pydantic schemas for bound results and CLI reports.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, model_validator

BoundMethod = Literal["direct", "kronecker", "analytic", "quasipure"]
Verdict = Literal["fully separable", "entangled", "entangled (approximate)", "inconclusive"]


class BoundReport(BaseModel):
    """Schema for one mixed-state estimate; value is the raw value clamped at zero."""
    method: BoundMethod
    value: float
    raw_value: float
    singular_values: List[float] = []
    restarts_used: int = 0
    iterations: int = 0
    converged: bool = True
    factors_used: Optional[int] = None
    dominance_ratio: Optional[float] = None
    flags: List[str] = []

    @model_validator(mode="after")
    def check_clamp(self) -> "BoundReport":
        if self.value != max(self.raw_value, 0.0):
            raise ValueError(f"value {self.value} must equal max(raw_value, 0)")
        return self

    @classmethod
    def from_raw(cls, method: BoundMethod, raw_value: float, **kwargs) -> "BoundReport":
        raw_value = float(raw_value)
        return cls(method=method, value=max(raw_value, 0.0), raw_value=raw_value, **kwargs)


class ReportDiagnostics(BaseModel):
    """Schema for report diagnostics."""
    rank: Optional[int] = None
    dominance_ratio: Optional[float] = None
    sigma_spectrum: List[float] = []
    lambda_at_optimum: List[float] = []
    converged: bool = True
    flags: List[str] = []
    restarts_used: int = 0
    iterations: int = 0
    factors_used: Optional[int] = None
    cube_magnitudes: Optional[List[float]] = None


class SeparabilityReport(BaseModel):
    """Schema for the machine-readable report of one criterion run."""
    method: str
    value: float
    raw_value: float
    verdict: Verdict
    diagnostics: ReportDiagnostics
    config: Dict[str, Any]


class SweepRow(BaseModel):
    """Schema for one CSV row of a noise sweep."""
    x: float
    value: float
    raw_value: float
    dominance_ratio: Optional[float] = None
    converged: bool = True


class MethodRow(BaseModel):
    """Schema for one CSV row of a mixed-state run, one per method."""
    method: BoundMethod
    value: float
    raw_value: float
    dominance_ratio: Optional[float] = None
    converged: bool = True


class ProfileRow(BaseModel):
    """Schema for one CSV row of a kronecker bound profile."""
    factors: int
    value: float
    raw_value: float
    converged: bool = True
