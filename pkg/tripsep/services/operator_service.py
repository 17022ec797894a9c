"""
Fixed operator families of the criterion.

The nine cube operators act on a three-qubit cube; selectors cut a cube out of
a higher-dimensional amplitude tensor by restricting each party to a pair of
levels. Flat basis order is |i j k> -> i*n2*n3 + j*n3 + k throughout.
"""
import itertools
import logging
from functools import lru_cache, reduce
from typing import Tuple

import numpy as np
from scipy import sparse

from tripsep.core.errors import InvalidDimensionError, InvalidInputError
from tripsep.models.operators import (
    CompositeSelector, CubeOperatorSet, Dims, SelectorSet, SparseObservable,
)
from tripsep.models.states import check_dims

logger = logging.getLogger(__name__)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
I_1 = np.array([[1, 0], [0, 0]], dtype=complex)
I_2 = np.array([[0, 0], [0, 1]], dtype=complex)

# s^delta = -(a (x) b (x) c), delta = 1..9
CUBE_FACTORS = (
    (SIGMA_Y, SIGMA_Y, I_1),
    (SIGMA_Y, SIGMA_Y, I_2),
    (SIGMA_Y, I_1, SIGMA_Y),
    (SIGMA_Y, I_2, SIGMA_Y),
    (I_1, SIGMA_Y, SIGMA_Y),
    (I_2, SIGMA_Y, SIGMA_Y),
    (SIGMA_X, SIGMA_Y, SIGMA_Y),
    (SIGMA_Y, SIGMA_X, SIGMA_Y),
    (SIGMA_Y, SIGMA_Y, SIGMA_X),
)


@lru_cache(maxsize=None)
def _cube_operators() -> CubeOperatorSet:
    ops = []
    for factors in CUBE_FACTORS:
        op = -reduce(np.kron, factors)
        # two sigma_y factors per operator, so the product is real
        ops.append(op.real)
    return CubeOperatorSet(ops=np.array(ops))


@lru_cache(maxsize=None)
def _selector_set(n: int) -> SelectorSet:
    pairs = tuple(itertools.combinations(range(n), 2))
    selectors = np.zeros((len(pairs), 2, n))
    for index, (j, k) in enumerate(pairs):
        selectors[index, 0, j] = 1.0
        selectors[index, 1, k] = 1.0
    return SelectorSet(dim=n, selectors=selectors, pair_index=pairs)


@lru_cache(maxsize=None)
def _composite_selectors(dims: Dims) -> Tuple[CompositeSelector, ...]:
    sets = [_selector_set(n) for n in dims]
    selectors = []
    for cube_id in itertools.product(*(range(len(s)) for s in sets)):
        parts = [s[index] for s, index in zip(sets, cube_id)]
        selectors.append(OperatorService.composite_selector(*parts, dims, cube_id=cube_id))
    return tuple(selectors)


@lru_cache(maxsize=None)
def _observables(dims: Dims) -> Tuple[SparseObservable, ...]:
    observables = []
    for selector in _composite_selectors(dims):
        for delta in range(1, 10):
            observables.append(OperatorService.cube_observable(selector, delta))
    logger.debug(f"Built {len(observables)} cube observables for dims {dims}")
    return tuple(observables)


@lru_cache(maxsize=None)
def _observable_stack(dims: Dims) -> Tuple[np.ndarray, sparse.csr_matrix]:
    observables = _observables(dims)
    tuple_ids = np.array([o.tuple_id for o in observables], dtype=int)
    tuple_ids.setflags(write=False)
    stack = sparse.vstack([o.to_sparse() for o in observables], format="csr")
    return tuple_ids, stack


class OperatorService:

    @staticmethod
    def cube_operators() -> CubeOperatorSet:
        return _cube_operators()

    @staticmethod
    def selector_set(n: int) -> SelectorSet:
        if int(n) < 2:
            raise InvalidDimensionError("local dimension must be >= 2", n)
        return _selector_set(int(n))

    @staticmethod
    def composite_selector(s_alpha: np.ndarray, s_beta: np.ndarray, s_gamma: np.ndarray,
                           dims, cube_id=None) -> CompositeSelector:
        dims = check_dims(dims)
        parts = tuple(np.asarray(s, dtype=float) for s in (s_alpha, s_beta, s_gamma))
        for party, (part, n) in enumerate(zip(parts, dims), start=1):
            if part.shape != (2, n):
                raise InvalidDimensionError(
                    f"selector of party {party} must be 2x{n}", part.shape
                )
        matrix = reduce(np.kron, parts)
        return CompositeSelector(
            parts=parts,
            matrix=matrix,
            cube_id=tuple(cube_id) if cube_id is not None else None,
        )

    @staticmethod
    def composite_selectors(dims) -> Tuple[CompositeSelector, ...]:
        """All composite selectors of ``dims`` in lexicographic triple order."""
        return _composite_selectors(check_dims(dims))

    @staticmethod
    def cube_observable(selector: CompositeSelector, delta: int) -> SparseObservable:
        if not 1 <= int(delta) <= 9:
            raise InvalidInputError("cube operator index must satisfy 1 <= delta <= 9", delta)
        op = _cube_operators().operator(int(delta))
        support = selector.support
        local_rows, local_cols = np.nonzero(op)
        cube_id = selector.cube_id if selector.cube_id is not None else (-1, -1, -1)
        return SparseObservable(
            dim=selector.matrix.shape[1],
            rows=support[local_rows],
            cols=support[local_cols],
            values=op[local_rows, local_cols],
            tuple_id=(*cube_id, int(delta)),
        )

    @staticmethod
    def observables(dims) -> Tuple[SparseObservable, ...]:
        """All I = 9*N1*N2*N3 observables, ordered by (alpha, beta, gamma, delta)."""
        return _observables(check_dims(dims))

    @staticmethod
    def observable_stack(dims) -> Tuple[np.ndarray, sparse.csr_matrix]:
        """Tuple ids and the (I*d) x d matrix stacking every observable."""
        return _observable_stack(check_dims(dims))

    @staticmethod
    def tuple_count(dims) -> int:
        n1, n2, n3 = check_dims(dims)
        pairs = [n * (n - 1) // 2 for n in (n1, n2, n3)]
        return 9 * pairs[0] * pairs[1] * pairs[2]
