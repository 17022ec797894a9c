"""
Lower bounds on the grid concurrence of a density matrix.

Route: rho = Phi M Phi^dagger -> symmetric T-matrices -> doubled-space operator
A = sum_t T_t (x) T_t^* -> factors A_j with A = sum_j A_j (x) A_j^* -> maximize
lambda_1(z) - sum_{i>1} lambda_i(z) of B(z) = sum_j z_j M_j over unit complex z.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from tripsep.core.config import settings
from tripsep.core.errors import InvalidInputError, InvalidStateError, SizeError
from tripsep.helpers.linalg import descending_order, singular_values, spread
from tripsep.managers.executor_manager import executor_manager
from tripsep.models.mixed import EigenStructure, KroneckerFactorization, TMatrixSet, ZOptimum
from tripsep.models.states import DensityMatrix
from tripsep.schemas.reports import BoundReport
from tripsep.schemas.runs import OptimizerConfig
from tripsep.services.operator_service import OperatorService

logger = logging.getLogger(__name__)

NOT_CONVERGED_FLAG = "optimizer not converged"


@dataclass(frozen=True)
class _Start:
    params: np.ndarray
    value: float
    z: np.ndarray


class _StallWatch:
    """Nelder-Mead callback: stop once the best value gains at most tol over a window."""

    def __init__(self, window: int, tol: float):
        self.window = window
        self.tol = tol
        self.history: List[float] = []
        self.stalled = False

    def __call__(self, intermediate_result):
        self.history.append(-float(intermediate_result.fun))
        if len(self.history) > self.window:
            if self.history[-1] - self.history[-1 - self.window] <= self.tol:
                self.stalled = True
                raise StopIteration


class MixedCriterionService:
    """Service for the mixed-state bounds: direct, kronecker and analytic."""

    # Spectral structure

    @staticmethod
    def eigen_structure(rho: DensityMatrix, rank_tol: Optional[float] = None) -> EigenStructure:
        rank_tol = settings.RANK_TOL if rank_tol is None else float(rank_tol)
        if not 0.0 < rank_tol < 1.0:
            raise InvalidInputError("rank tolerance must satisfy 0 < rank_tol < 1", rank_tol)

        values, vectors = np.linalg.eigh(rho.matrix)
        smallest = float(values.min())
        if smallest < -settings.PSD_TOL:
            logger.error(f"Density matrix is not positive semidefinite: {smallest!r}")
            raise InvalidStateError(
                f"density matrix must be positive semidefinite within {settings.PSD_TOL:g}; "
                f"smallest eigenvalue", smallest
            )
        values = np.clip(values, 0.0, None)
        order = descending_order(values)
        values, vectors = values[order], vectors[:, order]

        rank = int(np.count_nonzero(values > rank_tol * values[0]))
        logger.debug(f"Retained rank {rank} of {values.size}")
        return EigenStructure(
            dims=rho.dims,
            eigenvalues=values[:rank],
            eigenvectors=vectors[:, :rank],
        )

    @staticmethod
    def t_matrices(eig: EigenStructure) -> TMatrixSet:
        tuple_ids, stack = OperatorService.observable_stack(eig.dims)
        factor = eig.factor
        d, r = factor.shape
        projected = (stack @ factor).reshape(-1, d, r)
        # Phi^T, not Phi^dagger
        matrices = np.einsum("da,tdb->tab", factor, projected)
        return TMatrixSet(matrices=matrices, tuple_ids=tuple_ids)

    @staticmethod
    def assemble_A_explicit(eig: EigenStructure) -> np.ndarray:
        """Doubled-space operator built term by term from S (x) S, s (x) s and rho^{1/2}."""
        r = eig.rank
        if r * r > settings.EXPLICIT_A_MAX:
            raise SizeError(
                f"explicit assembly is limited to r'^2 <= {settings.EXPLICIT_A_MAX}", r * r
            )
        factor = eig.factor
        rho_half = np.kron(factor, factor.conj())
        ops = OperatorService.cube_operators()
        doubled_ops = [np.kron(op, op) for op in ops.ops]

        A = np.zeros((r * r, r * r), dtype=complex)
        for selector in OperatorService.composite_selectors(eig.dims):
            doubled_selector = np.kron(selector.matrix, selector.matrix)
            lifted = doubled_selector @ rho_half
            for doubled_op in doubled_ops:
                A += lifted.T @ doubled_op @ lifted
        return A

    # Rearrangement and factorization

    @staticmethod
    def rearrange(A: np.ndarray, r: int) -> np.ndarray:
        """
        Index reshuffle with rearrange(X (x) Y^*) = vec(X) vec(Y)^dagger.

        A[(a, c), (b, d)] moves to position [(b, a), (d, c)], the column-stacked
        positions of X[a, b] and Y[c, d].
        """
        A = np.asarray(A)
        if A.ndim != 2 or A.shape != (r * r, r * r):
            raise SizeError(f"operator must be {r * r}x{r * r} for r' = {r}", A.shape)
        return A.reshape(r, r, r, r).transpose(2, 0, 3, 1).reshape(r * r, r * r)

    @staticmethod
    def vec(X: np.ndarray) -> np.ndarray:
        return np.asarray(X).reshape(-1, order="F")

    @staticmethod
    def unvec(v: np.ndarray, r: int) -> np.ndarray:
        v = np.asarray(v)
        if v.size != r * r:
            raise SizeError(f"vector must have r'^2 = {r * r} entries", v.size)
        return v.reshape(r, r, order="F")

    @staticmethod
    def _retained_count(spectrum: np.ndarray, trunc_tol: float,
                        max_factors: Optional[int]) -> int:
        count = int(np.count_nonzero(spectrum > trunc_tol * spectrum[0]))
        if max_factors is not None:
            count = min(count, int(max_factors))
        # a product state has an all-zero spectrum; keep its zero factor
        return max(count, 1)

    @staticmethod
    def _check_truncation(trunc_tol: Optional[float],
                          max_factors: Optional[int]) -> float:
        trunc_tol = settings.TRUNC_TOL if trunc_tol is None else float(trunc_tol)
        if not 0.0 < trunc_tol < 1.0:
            raise InvalidInputError("truncation tolerance must satisfy 0 < trunc_tol < 1",
                                    trunc_tol)
        if max_factors is not None and int(max_factors) < 1:
            raise InvalidInputError("max_factors must be >= 1", max_factors)
        return trunc_tol

    @staticmethod
    def kronecker_factorize(tset: TMatrixSet, trunc_tol: Optional[float] = None,
                            max_factors: Optional[int] = None) -> KroneckerFactorization:
        """Gram route: G_tt' = tr(T_t^dagger T_t'), A_j = sum_t (v_j)_t T_t."""
        if len(tset) == 0:
            raise InvalidInputError("T-matrix set is empty")
        trunc_tol = MixedCriterionService._check_truncation(trunc_tol, max_factors)
        if max_factors is None:
            max_factors = settings.MAX_FACTORS

        flat = tset.matrices.reshape(len(tset), -1)
        gram = flat.conj() @ flat.T
        sigmas, vectors = np.linalg.eigh(gram)
        order = descending_order(sigmas)
        sigmas = np.clip(sigmas[order], 0.0, None)
        vectors = vectors[:, order]

        retained = MixedCriterionService._retained_count(sigmas, trunc_tol, max_factors)
        factors = np.tensordot(vectors[:, :retained].T, tset.matrices, axes=1)
        logger.debug(f"Kronecker factorization retained {retained} of {sigmas.size} factors")
        return KroneckerFactorization(
            sigmas=sigmas[:retained],
            factors=factors,
            spectrum=sigmas,
            trunc_tol=trunc_tol,
        )

    @staticmethod
    def factorize_rearranged(A: np.ndarray, r: int, trunc_tol: Optional[float] = None,
                             max_factors: Optional[int] = None) -> KroneckerFactorization:
        """SVD route: vec(A_j) = sqrt(sigma_j) u_j from the rearranged operator."""
        trunc_tol = MixedCriterionService._check_truncation(trunc_tol, max_factors)
        rearranged = MixedCriterionService.rearrange(A, r)
        left, sigmas, _ = np.linalg.svd(rearranged)
        retained = MixedCriterionService._retained_count(sigmas, trunc_tol, max_factors)
        factors = np.array([
            MixedCriterionService.unvec(np.sqrt(sigmas[j]) * left[:, j], r)
            for j in range(retained)
        ])
        return KroneckerFactorization(
            sigmas=sigmas[:retained],
            factors=factors,
            spectrum=sigmas,
            trunc_tol=trunc_tol,
        )

    @staticmethod
    def truncate(fact: KroneckerFactorization, count: int) -> KroneckerFactorization:
        """The factorization restricted to its ``count`` leading factors."""
        if int(count) < 1:
            raise InvalidInputError("at least one factor must be kept", count)
        count = min(int(count), fact.retained)
        return KroneckerFactorization(
            sigmas=fact.sigmas[:count],
            factors=fact.factors[:count],
            spectrum=fact.spectrum,
            trunc_tol=fact.trunc_tol,
        )

    # Optimization over z

    @staticmethod
    def _params_to_z(params: np.ndarray, size: int) -> np.ndarray:
        amplitudes = np.abs(params[:size])
        norm = np.linalg.norm(amplitudes)
        if norm == 0.0:
            amplitudes = np.eye(size)[0]
        else:
            amplitudes = amplitudes / norm
        phases = np.concatenate(([0.0], params[size:]))
        return amplitudes * np.exp(1j * phases)

    @staticmethod
    def _z_to_params(z: np.ndarray) -> np.ndarray:
        angles = np.angle(z)
        return np.concatenate((np.abs(z), angles[1:] - angles[0]))

    @staticmethod
    def _evaluate(stack: np.ndarray, z: np.ndarray):
        values = singular_values(np.tensordot(z, stack, axes=1))
        return spread(values), values

    @staticmethod
    def _alignment_ascent(stack: np.ndarray, z: np.ndarray, sweeps: int) -> np.ndarray:
        """Fixed point z <- conj(g)/|g|, g_j = u_1^dagger M_j v_1; lambda_1 never decreases."""
        best_z = z
        best_value, _ = MixedCriterionService._evaluate(stack, z)
        for _ in range(sweeps):
            left, _, right_h = np.linalg.svd(np.tensordot(z, stack, axes=1))
            g = np.einsum("a,jab,b->j", left[:, 0].conj(), stack, right_h[0].conj())
            norm = np.linalg.norm(g)
            if norm == 0.0:
                break
            z = g.conj() / norm
            value, _ = MixedCriterionService._evaluate(stack, z)
            if value > best_value:
                best_z, best_value = z, value
        return best_z

    @staticmethod
    def optimize_z(matrices, cfg: Optional[OptimizerConfig] = None,
                   warm_starts: Sequence[np.ndarray] = ()) -> ZOptimum:
        cfg = cfg or OptimizerConfig()
        try:
            stack = np.asarray(matrices, dtype=complex)
        except ValueError as e:
            raise InvalidInputError("all matrices must have the same shape") from e
        if stack.ndim != 3 or stack.shape[0] == 0 or stack.shape[1] != stack.shape[2]:
            raise InvalidInputError("matrix list must be a nonempty stack of square matrices",
                                    stack.shape)
        size = stack.shape[0]

        if size == 1:
            value, values = MixedCriterionService._evaluate(stack, np.ones(1, dtype=complex))
            return ZOptimum(z=np.ones(1, dtype=complex), value=value, singular_values=values,
                            restarts_used=1, iterations=0, converged=True)

        evaluate = MixedCriterionService._evaluate

        def make_start(z: np.ndarray) -> _Start:
            z = np.asarray(z, dtype=complex)
            if z.shape != (size,):
                raise InvalidInputError(f"start vector must have {size} entries", z.shape)
            z = z / np.linalg.norm(z)
            return _Start(params=MixedCriterionService._z_to_params(z),
                          value=evaluate(stack, z)[0], z=z)

        starts: List[_Start] = [make_start(np.eye(size)[0])]

        flat = stack.reshape(size, -1)
        _, gram_vectors = np.linalg.eigh(flat.conj() @ flat.T)
        starts.append(make_start(gram_vectors[:, -1]))
        starts.extend(make_start(z) for z in warm_starts)

        seeded = max(starts, key=lambda start: start.value)
        starts.append(make_start(
            MixedCriterionService._alignment_ascent(stack, seeded.z, cfg.align_sweeps)
        ))

        rng = np.random.default_rng(cfg.seed)
        for _ in range(max(cfg.restarts - len(starts), 0)):
            params = np.concatenate((rng.random(size), rng.uniform(0.0, 2 * np.pi, size - 1)))
            z = MixedCriterionService._params_to_z(params, size)
            starts.append(_Start(params=params, value=evaluate(stack, z)[0], z=z))

        def objective(params: np.ndarray) -> float:
            return -evaluate(stack, MixedCriterionService._params_to_z(params, size))[0]

        def refine(start: _Start):
            # Converged on value: the best vertex stalled or the simplex values agree within tol
            watch = _StallWatch(cfg.stall_iters, cfg.tol)
            result = minimize(
                objective,
                start.params,
                method="Nelder-Mead",
                callback=watch,
                options={
                    "maxiter": cfg.max_iters,
                    "xatol": np.inf,
                    "fatol": cfg.tol,
                    "adaptive": True,
                },
            )
            refined_value = -float(result.fun)
            if refined_value > start.value:
                z = MixedCriterionService._params_to_z(result.x, size)
            else:
                z, refined_value = start.z, start.value
            return z, refined_value, int(result.nit), bool(result.success or watch.stalled)

        outcomes = executor_manager.map(refine, starts)

        best = outcomes[0]
        for outcome in outcomes[1:]:
            if outcome[1] > best[1]:
                best = outcome
        z, value, _, converged = best
        _, values = evaluate(stack, z)
        iterations = sum(outcome[2] for outcome in outcomes)
        logger.debug(f"Optimized z over {len(starts)} starts: value {value!r}")
        return ZOptimum(z=z, value=value, singular_values=values, restarts_used=len(starts),
                        iterations=iterations, converged=converged)

    # Bounds

    @staticmethod
    def _optimum_report(method: str, optimum: ZOptimum, **kwargs) -> BoundReport:
        flags = [] if optimum.converged else [NOT_CONVERGED_FLAG]
        return BoundReport.from_raw(
            method,
            optimum.value,
            singular_values=optimum.singular_values.tolist(),
            restarts_used=optimum.restarts_used,
            iterations=optimum.iterations,
            converged=optimum.converged,
            flags=flags,
            **kwargs,
        )

    @staticmethod
    def lower_bound_kronecker(fact: KroneckerFactorization,
                              cfg: Optional[OptimizerConfig] = None,
                              warm_starts: Sequence[np.ndarray] = ()) -> BoundReport:
        optimum = MixedCriterionService.optimize_z(fact.factors, cfg, warm_starts)
        return MixedCriterionService._optimum_report(
            "kronecker", optimum, factors_used=fact.retained
        )

    @staticmethod
    def lower_bound_direct(tset: TMatrixSet,
                           cfg: Optional[OptimizerConfig] = None) -> BoundReport:
        if len(tset) > settings.DIRECT_MAX_TUPLES:
            raise SizeError(
                f"direct route is limited to I <= {settings.DIRECT_MAX_TUPLES} tuples; "
                f"use the kronecker route", len(tset)
            )
        optimum = MixedCriterionService.optimize_z(tset.matrices, cfg)
        return MixedCriterionService._optimum_report("direct", optimum)

    @staticmethod
    def analytic_bound(fact: KroneckerFactorization) -> BoundReport:
        if fact.retained < 1:
            raise InvalidInputError("analytic bound needs at least one factor")
        values = singular_values(fact.factors[0])
        return BoundReport.from_raw(
            "analytic", spread(values), singular_values=values.tolist(), factors_used=1
        )

    @staticmethod
    def lower_bound_profile(fact: KroneckerFactorization,
                            cfg: Optional[OptimizerConfig] = None,
                            max_factors: Optional[int] = None) -> List[BoundReport]:
        """Kronecker bounds with 1..K leading factors, each warm-started from the last."""
        limit = fact.retained if max_factors is None else min(int(max_factors), fact.retained)
        if limit < 1:
            raise InvalidInputError("profile needs at least one factor", max_factors)

        reports = []
        previous: Optional[np.ndarray] = None
        for count in range(1, limit + 1):
            truncated = MixedCriterionService.truncate(fact, count)
            warm = () if previous is None else (np.append(previous, 0.0),)
            optimum = MixedCriterionService.optimize_z(truncated.factors, cfg, warm)
            reports.append(MixedCriterionService._optimum_report(
                "kronecker", optimum, factors_used=count
            ))
            previous = optimum.z
            logger.info(f"Profile with {count} factors: {optimum.value!r}")
        return reports
