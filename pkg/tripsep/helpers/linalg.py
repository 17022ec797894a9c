import math
from typing import Iterable

import numpy as np


def freeze(array) -> np.ndarray:
    """Return a read-only copy of ``array``."""
    frozen = np.array(array, copy=True)
    frozen.setflags(write=False)
    return frozen


def descending_order(values: np.ndarray) -> np.ndarray:
    # ties keep their original index order
    return np.argsort(-np.asarray(values), kind="stable")


def ordered_sum(values: Iterable[float]) -> float:
    return math.fsum(float(v) for v in values)


def spread(singular_values: np.ndarray) -> float:
    """lambda_1 - sum_{i>1} lambda_i for values sorted in decreasing order."""
    if len(singular_values) == 0:
        return 0.0
    return float(singular_values[0]) - ordered_sum(singular_values[1:])


def singular_values(matrix: np.ndarray) -> np.ndarray:
    return np.linalg.svd(matrix, compute_uv=False)
