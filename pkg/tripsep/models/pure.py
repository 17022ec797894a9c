from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .base import ArrayModel


@dataclass(frozen=True)
class CubeConcurrenceVector(ArrayModel):
    """The nine bilinear forms C^alpha of one cube and their Euclidean norm."""
    components: np.ndarray
    magnitude: float


@dataclass(frozen=True)
class CubeDecomposition(ArrayModel):
    """Non-normalized 8-amplitude cube states, one row per selector triple."""
    cube_ids: np.ndarray
    cubes: np.ndarray

    def __len__(self) -> int:
        return self.cubes.shape[0]


@dataclass(frozen=True)
class PureDecision:
    """Verdict of the pure-state criterion."""
    separable: bool
    value: float
    tol: float
    flags: Tuple[str, ...] = field(default_factory=tuple)
