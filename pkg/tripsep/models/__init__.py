from .base import ArrayModel
from .mixed import EigenStructure, KroneckerFactorization, QuasiPureTau, TMatrixSet, ZOptimum
from .operators import CompositeSelector, CubeOperatorSet, SelectorSet, SparseObservable
from .pure import CubeConcurrenceVector, CubeDecomposition, PureDecision
from .states import DensityMatrix, PureStateTensor

__all__ = [
    "ArrayModel",
    "CompositeSelector",
    "CubeConcurrenceVector",
    "CubeDecomposition",
    "CubeOperatorSet",
    "DensityMatrix",
    "EigenStructure",
    "KroneckerFactorization",
    "PureDecision",
    "PureStateTensor",
    "QuasiPureTau",
    "SelectorSet",
    "SparseObservable",
    "TMatrixSet",
    "ZOptimum",
]
