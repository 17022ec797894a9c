"""
Analytic estimate for density matrices dominated by one eigenvector.
"""
import logging
import math
from typing import Optional

import numpy as np

from tripsep.core.config import settings
from tripsep.helpers.linalg import ordered_sum, singular_values, spread
from tripsep.models.mixed import EigenStructure, QuasiPureTau, TMatrixSet
from tripsep.schemas.reports import BoundReport

logger = logging.getLogger(__name__)

SEPARABLE_DOMINANT_FLAG = "quasipure inconclusive: dominant eigenvector separable"
AMBIGUOUS_DOMINANT_FLAG = "dominant eigenvector ambiguous"
OUTSIDE_REGIME_FLAG = "outside quasi-pure regime"


class QuasiPureService:

    @staticmethod
    def tau_matrix(eig: EigenStructure, tset: TMatrixSet,
                   eps: Optional[float] = None) -> QuasiPureTau:
        """
        tau_lm = A^lm_11 / sqrt(A^11_11) with A^lm_11 = sum_t T_t[l, 1] T_t[m, 1]^*.

        Only the terms anchored on the dominant eigenvector enter. When that
        eigenvector has a vanishing concurrence vector the estimate is blind,
        and a zero tau is returned with a flag instead.
        """
        eps = settings.QUASI_PURE_EPS if eps is None else float(eps)
        flags = []
        values = eig.eigenvalues
        if eig.rank > 1 and values[0] - values[1] <= settings.DEGENERACY_TOL:
            flags.append(AMBIGUOUS_DOMINANT_FLAG)
        if eig.dominance_ratio > settings.QUASI_PURE_MAX_RATIO:
            flags.append(OUTSIDE_REGIME_FLAG)

        column = tset.matrices[:, :, 0]
        dominant_weight = ordered_sum(np.abs(column[:, 0]) ** 2)
        if dominant_weight <= eps:
            logger.info(f"Dominant weight {dominant_weight:g} at or below {eps:g}")
            flags.append(SEPARABLE_DOMINANT_FLAG)
            tau = np.zeros((eig.rank, eig.rank), dtype=complex)
        else:
            tau = column.T @ column.conj() / math.sqrt(dominant_weight)

        return QuasiPureTau(
            tau=tau,
            dominance_ratio=eig.dominance_ratio,
            dominant_weight=dominant_weight,
            flags=tuple(flags),
        )

    @staticmethod
    def quasi_pure_estimate(tau: QuasiPureTau) -> BoundReport:
        values = singular_values(tau.tau)
        return BoundReport.from_raw(
            "quasipure",
            spread(values),
            singular_values=values.tolist(),
            dominance_ratio=tau.dominance_ratio,
            flags=list(tau.flags),
        )
