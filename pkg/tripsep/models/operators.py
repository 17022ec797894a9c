"""
Operator families of the criterion: cube operators, level-pair selectors,
composite selectors and the sparse observables built from them.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from tripsep.helpers.linalg import freeze
from .base import ArrayModel

Dims = Tuple[int, int, int]
CubeId = Tuple[int, int, int]
TupleId = Tuple[int, int, int, int]


@dataclass(frozen=True)
class CubeOperatorSet(ArrayModel):
    """The nine real symmetric 8x8 operators, stored 0-based as ops[delta - 1]."""
    ops: np.ndarray

    def __len__(self) -> int:
        return self.ops.shape[0]

    def operator(self, delta: int) -> np.ndarray:
        return self.ops[delta - 1]


@dataclass(frozen=True)
class SelectorSet(ArrayModel):
    """Selectors s_q of one party, one 2 x n matrix per level pair (j, k), j < k."""
    dim: int
    selectors: np.ndarray
    pair_index: Tuple[Tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pair_index)

    def __getitem__(self, index: int) -> np.ndarray:
        return self.selectors[index]


@dataclass(frozen=True)
class CompositeSelector(ArrayModel):
    """S = s_alpha (x) s_beta (x) s_gamma, an 8 x d matrix with one unit entry per row."""
    parts: Tuple[np.ndarray, np.ndarray, np.ndarray]
    matrix: np.ndarray
    cube_id: Optional[CubeId] = None

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "parts", tuple(freeze(part) for part in self.parts))

    @property
    def support(self) -> np.ndarray:
        """Flat basis index picked by each of the 8 rows."""
        return np.argmax(self.matrix, axis=1)

    def extract(self, amplitudes: np.ndarray) -> np.ndarray:
        return self.matrix @ amplitudes


@dataclass(frozen=True)
class SparseObservable(ArrayModel):
    """O_t = S^T s^delta S in coordinate form."""
    dim: int
    rows: np.ndarray
    cols: np.ndarray
    values: np.ndarray
    tuple_id: Optional[TupleId] = None

    @property
    def nnz(self) -> int:
        return len(self.values)

    def to_sparse(self) -> sparse.csr_matrix:
        return sparse.coo_matrix(
            (self.values, (self.rows, self.cols)), shape=(self.dim, self.dim)
        ).tocsr()

    def to_dense(self) -> np.ndarray:
        return self.to_sparse().toarray()

    def expectation(self, amplitudes: np.ndarray) -> complex:
        """Bilinear form <chi*| O |chi>, no complex conjugation."""
        return complex(np.sum(amplitudes[self.rows] * self.values * amplitudes[self.cols]))
