"""
Exact full-separability criterion for tripartite pure states.
"""
import logging
import math
from typing import Optional

import numpy as np

from tripsep.core.config import settings
from tripsep.core.errors import InvalidInputError
from tripsep.helpers.linalg import ordered_sum
from tripsep.models.pure import CubeConcurrenceVector, CubeDecomposition, PureDecision
from tripsep.models.states import PureStateTensor
from tripsep.services.operator_service import OperatorService

logger = logging.getLogger(__name__)

DEGENERATE_FLAG = "degenerate input"


class PureCriterionService:
    """Service for the cube concurrence vector and the tensor-grid concurrence."""

    @staticmethod
    def cube_concurrence_vector(psi) -> CubeConcurrenceVector:
        psi = np.asarray(psi, dtype=complex).ravel()
        if psi.size != 8:
            raise InvalidInputError("cube state must have exactly 8 amplitudes", psi.size)
        ops = OperatorService.cube_operators().ops
        # bilinear: sum_uv psi_u s_uv psi_v, no conjugation
        components = np.einsum("u,duv,v->d", psi, ops, psi)
        magnitude = math.sqrt(ordered_sum(np.abs(components) ** 2))
        return CubeConcurrenceVector(components=components, magnitude=magnitude)

    @staticmethod
    def enumerate_cubes(chi: PureStateTensor) -> CubeDecomposition:
        selectors = OperatorService.composite_selectors(chi.dims)
        cubes = np.array([selector.extract(chi.amplitudes) for selector in selectors])
        cube_ids = np.array([selector.cube_id for selector in selectors], dtype=int)
        return CubeDecomposition(cube_ids=cube_ids, cubes=cubes)

    @staticmethod
    def cube_magnitudes(chi: PureStateTensor) -> np.ndarray:
        """C(phi_i) of every cube, in lexicographic cube order."""
        decomposition = PureCriterionService.enumerate_cubes(chi)
        return np.array([
            PureCriterionService.cube_concurrence_vector(cube).magnitude
            for cube in decomposition.cubes
        ])

    @staticmethod
    def grid_concurrence(chi: PureStateTensor) -> float:
        _, stack = OperatorService.observable_stack(chi.dims)
        v = chi.amplitudes
        forms = (stack @ v).reshape(-1, chi.dim) @ v
        return math.sqrt(ordered_sum(np.abs(forms) ** 2))

    @staticmethod
    def grid_concurrence_from_cubes(chi: PureStateTensor) -> float:
        """Same quantity as grid_concurrence, summed cube by cube."""
        magnitudes = PureCriterionService.cube_magnitudes(chi)
        return math.sqrt(ordered_sum(magnitudes ** 2))

    @staticmethod
    def is_fully_separable_pure(chi: PureStateTensor,
                                tol: Optional[float] = None) -> PureDecision:
        tol = settings.PURE_TOL if tol is None else float(tol)
        if not tol >= 0.0:
            raise InvalidInputError("separability tolerance must be >= 0", tol)

        if chi.norm <= settings.DEGENERATE_NORM_TOL:
            logger.warning(f"State norm {chi.norm:g} is below the degenerate threshold")
            return PureDecision(separable=True, value=0.0, tol=tol, flags=(DEGENERATE_FLAG,))

        value = PureCriterionService.grid_concurrence(chi)
        logger.debug(f"Grid concurrence {value!r} for dims {chi.dims}")
        return PureDecision(separable=value <= tol, value=value, tol=tol)
