"""
State records: pure amplitude tensors and density matrices of three parties.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from tripsep.core.config import settings
from tripsep.core.errors import InvalidDimensionError, InvalidInputError, InvalidStateError
from .base import ArrayModel

Dims = Tuple[int, int, int]


def check_dims(dims) -> Dims:
    dims = tuple(int(n) for n in dims)
    if len(dims) != 3:
        raise InvalidDimensionError("exactly three local dimensions are required", dims)
    if any(n < 2 for n in dims):
        raise InvalidDimensionError("every local dimension must be >= 2", dims)
    return dims


@dataclass(frozen=True)
class PureStateTensor(ArrayModel):
    """Amplitudes a_ijk in flat order i*n2*n3 + j*n3 + k. Normalization is not required."""
    dims: Dims
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = check_dims(self.dims)
        amplitudes = np.asarray(self.amplitudes, dtype=complex).ravel()
        if amplitudes.size != int(np.prod(dims)):
            raise InvalidDimensionError(
                f"amplitude count must equal n1*n2*n3 = {int(np.prod(dims))}", amplitudes.size
            )
        if not np.all(np.isfinite(amplitudes)):
            raise InvalidInputError("amplitudes must be finite")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amplitudes)
        super().__post_init__()

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims)


@dataclass(frozen=True)
class DensityMatrix(ArrayModel):
    """d x d Hermitian, trace-one matrix; positivity is checked by the eigendecomposition."""
    dims: Dims
    matrix: np.ndarray

    def __post_init__(self):
        dims = check_dims(self.dims)
        d = int(np.prod(dims))
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.shape != (d, d):
            raise InvalidDimensionError(f"density matrix must be {d}x{d}", matrix.shape)
        if not np.all(np.isfinite(matrix)):
            raise InvalidStateError("density matrix entries must be finite")
        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T)))
        if asymmetry > settings.HERMITIAN_TOL:
            raise InvalidStateError(
                f"density matrix must be Hermitian within {settings.HERMITIAN_TOL:g}; "
                f"max |rho - rho^dagger|", asymmetry
            )
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > settings.TRACE_TOL:
            raise InvalidStateError(
                f"density matrix must have trace 1 within {settings.TRACE_TOL:g}; trace", trace
            )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", matrix)
        super().__post_init__()

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]
