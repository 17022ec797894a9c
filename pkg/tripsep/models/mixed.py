"""
Intermediate records of the mixed-state bounds.
"""
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from tripsep.helpers.linalg import ordered_sum
from .base import ArrayModel
from .states import Dims


@dataclass(frozen=True)
class EigenStructure(ArrayModel):
    """Retained spectrum of rho: descending eigenvalues u and orthonormal columns Phi."""
    dims: Dims
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def rank(self) -> int:
        return self.eigenvalues.size

    @property
    def factor(self) -> np.ndarray:
        """Phi M^{1/2}, the d x r' square-root factor of rho."""
        return self.eigenvectors * np.sqrt(self.eigenvalues)

    @property
    def dominance_ratio(self) -> float:
        if self.rank < 2:
            return 0.0
        return float(self.eigenvalues[1] / self.eigenvalues[0])

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T


@dataclass(frozen=True)
class TMatrixSet(ArrayModel):
    """T_t = M^{1/2} Phi^T O_t Phi M^{1/2} for every tuple t = (alpha, beta, gamma, delta)."""
    matrices: np.ndarray
    tuple_ids: np.ndarray

    def __len__(self) -> int:
        return self.matrices.shape[0]

    @property
    def rank(self) -> int:
        return self.matrices.shape[1]

    def kron_sum(self) -> np.ndarray:
        """sum_t T_t (x) T_t^*, the doubled-space operator A."""
        r = self.rank
        stack = np.einsum("tab,tcd->acbd", self.matrices, self.matrices.conj())
        return stack.reshape(r * r, r * r)


@dataclass(frozen=True)
class KroneckerFactorization(ArrayModel):
    """A = sum_j A_j (x) A_j^* with ||A_j||_F^2 = sigma_j, truncated to the leading factors."""
    sigmas: np.ndarray
    factors: np.ndarray
    spectrum: np.ndarray
    trunc_tol: float

    @property
    def retained(self) -> int:
        return self.sigmas.size

    @property
    def total_weight(self) -> float:
        return ordered_sum(self.spectrum)

    @property
    def discarded_weight(self) -> float:
        return ordered_sum(self.spectrum[self.retained:])

    def reconstruct(self) -> np.ndarray:
        r = self.factors.shape[1]
        stack = np.einsum("jab,jcd->acbd", self.factors, self.factors.conj())
        return stack.reshape(r * r, r * r)


@dataclass(frozen=True)
class ZOptimum(ArrayModel):
    """Best parameter vector found by the multistart search."""
    z: np.ndarray
    value: float
    singular_values: np.ndarray
    restarts_used: int
    iterations: int
    converged: bool


@dataclass(frozen=True)
class QuasiPureTau(ArrayModel):
    tau: np.ndarray
    dominance_ratio: float
    dominant_weight: float
    flags: Tuple[str, ...] = field(default_factory=tuple)
