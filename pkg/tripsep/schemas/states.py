"""
Pydantic schemas for state specifications and state files.
"""
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

StateName = Literal[
    "ghz", "w", "ghz_prime", "w_prime", "random_product", "random_pure", "random_semiseparable",
]
NAMED_STATES = ("ghz", "w", "ghz_prime", "w_prime")
RANDOM_STATES = ("random_product", "random_pure", "random_semiseparable")

Complex = Tuple[float, float]


class StateSpec(BaseModel):
    """Schema for a named or seeded random pure state."""
    model_config = ConfigDict(frozen=True)

    name: StateName
    dims: Optional[Tuple[int, int, int]] = Field(None, description="Local dimensions (n1, n2, n3)")
    seed: Optional[NonNegativeInt] = Field(None, description="Seed of the random families")
    cut: Literal["AB", "AC", "BC"] = Field("AB", description="Entangled pair (semiseparable)")
    min_schmidt: Optional[float] = Field(
        None, gt=0.0, le=0.7, description="Rejection floor on the second Schmidt coefficient"
    )


class PureStateFile(BaseModel):
    """Pure state file: amplitudes as [re, im] pairs in flat lexicographic order."""
    type: Literal["pure"] = "pure"
    dims: Tuple[int, int, int]
    amplitudes: List[Complex]


class DensityFile(BaseModel):
    """Density matrix file: row-major [re, im] entries."""
    type: Literal["mixed"] = "mixed"
    dims: Tuple[int, int, int]
    matrix: List[List[Complex]]
