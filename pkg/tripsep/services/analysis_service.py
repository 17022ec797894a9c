"""
End-to-end pipelines behind the CLI commands.
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple

from tripsep.core.config import settings
from tripsep.core.errors import InvalidInputError
from tripsep.managers.executor_manager import executor_manager
from tripsep.models.mixed import EigenStructure, KroneckerFactorization
from tripsep.models.states import DensityMatrix, PureStateTensor
from tripsep.schemas.reports import (
    BoundReport, MethodRow, ProfileRow, ReportDiagnostics, SeparabilityReport, SweepRow,
)
from tripsep.schemas.runs import RunConfig
from tripsep.schemas.states import StateSpec
from tripsep.services.mixed_criterion_service import MixedCriterionService
from tripsep.services.pure_criterion_service import PureCriterionService
from tripsep.services.quasi_pure_service import QuasiPureService
from tripsep.services.state_service import StateService

logger = logging.getLogger(__name__)

BOUND_METHODS = ("direct", "kronecker", "analytic", "quasipure")
# Routes whose positive value certifies entanglement; quasipure is an estimate
CERTIFIED_METHODS = ("direct", "kronecker", "analytic")


class AnalysisService:
    """Service that chains the criterion services into reports."""

    def __init__(self):
        self.state_service = StateService()

    @staticmethod
    def _methods(method: str) -> Tuple[str, ...]:
        if method == "all":
            return BOUND_METHODS
        if method not in BOUND_METHODS:
            raise InvalidInputError("method must be one of direct, kronecker, analytic, "
                                    "quasipure or all for a density matrix", method)
        return (method,)

    @staticmethod
    def verdict(report: BoundReport, tol: float) -> str:
        if report.value <= tol:
            return "inconclusive"
        if report.method in CERTIFIED_METHODS:
            return "entangled"
        return "entangled (approximate)"

    @staticmethod
    def grid(x_start: float, x_end: float, x_step: float) -> List[float]:
        """Points x_i = x_start + i * x_step up to x_end, rounded to 12 decimals."""
        if not x_step > 0.0:
            raise InvalidInputError("sweep step must be > 0", x_step)
        if x_end < x_start:
            raise InvalidInputError("sweep end must not precede its start", (x_start, x_end))
        count = int(math.floor((x_end - x_start) / x_step + 1e-9)) + 1
        return [round(x_start + i * x_step, 12) for i in range(count)]

    # Pure states

    def analyse_pure(self, state: PureStateTensor, config: RunConfig) -> SeparabilityReport:
        decision = PureCriterionService.is_fully_separable_pure(state, config.tol)
        magnitudes = PureCriterionService.cube_magnitudes(state)
        logger.info(f"Pure criterion value {decision.value!r} for dims {state.dims}")
        return SeparabilityReport(
            method="pure",
            value=decision.value,
            raw_value=decision.value,
            verdict="fully separable" if decision.separable else "entangled",
            diagnostics=ReportDiagnostics(
                rank=1,
                flags=list(decision.flags),
                cube_magnitudes=magnitudes.tolist(),
            ),
            config=config.model_dump(mode="json"),
        )

    # Mixed states

    def bound_reports(self, rho: DensityMatrix, config: RunConfig,
                      methods: Sequence[str]
                      ) -> Tuple[EigenStructure, Optional[KroneckerFactorization],
                                 List[BoundReport]]:
        eig = MixedCriterionService.eigen_structure(rho, config.rank_tol)
        tset = MixedCriterionService.t_matrices(eig)
        fact = None
        if "kronecker" in methods or "analytic" in methods:
            fact = MixedCriterionService.kronecker_factorize(
                tset, config.trunc_tol, config.max_factors
            )

        cfg = config.optimizer()
        reports = []
        for method in methods:
            if method == "direct":
                if len(methods) > 1 and len(tset) > settings.DIRECT_MAX_TUPLES:
                    logger.warning(f"Skipping direct route: {len(tset)} tuples exceed "
                                   f"{settings.DIRECT_MAX_TUPLES}")
                    continue
                report = MixedCriterionService.lower_bound_direct(tset, cfg)
            elif method == "kronecker":
                report = MixedCriterionService.lower_bound_kronecker(fact, cfg)
            elif method == "analytic":
                report = MixedCriterionService.analytic_bound(fact)
            else:
                tau = QuasiPureService.tau_matrix(eig, tset)
                report = QuasiPureService.quasi_pure_estimate(tau)
            logger.info(f"{method} bound: {report.value!r}")
            reports.append(report)
        return eig, fact, reports

    def analyse_mixed(self, rho: DensityMatrix,
                      config: RunConfig) -> List[SeparabilityReport]:
        methods = self._methods(config.method)
        eig, fact, reports = self.bound_reports(rho, config, methods)
        spectrum = fact.sigmas.tolist() if fact is not None else []
        return [
            SeparabilityReport(
                method=report.method,
                value=report.value,
                raw_value=report.raw_value,
                verdict=self.verdict(report, config.tol),
                diagnostics=ReportDiagnostics(
                    rank=eig.rank,
                    dominance_ratio=eig.dominance_ratio,
                    sigma_spectrum=spectrum if report.method in ("kronecker", "analytic") else [],
                    lambda_at_optimum=report.singular_values,
                    converged=report.converged,
                    flags=report.flags,
                    restarts_used=report.restarts_used,
                    iterations=report.iterations,
                    factors_used=report.factors_used,
                ),
                config=config.model_dump(mode="json"),
            )
            for report in reports
        ]

    def method_rows(self, rho: DensityMatrix, config: RunConfig) -> List[MethodRow]:
        eig, _, reports = self.bound_reports(rho, config, self._methods(config.method))
        return [
            MethodRow(
                method=report.method,
                value=report.value,
                raw_value=report.raw_value,
                dominance_ratio=eig.dominance_ratio,
                converged=report.converged,
            )
            for report in reports
        ]

    def sweep(self, spec: StateSpec, xs: Sequence[float], config: RunConfig) -> List[SweepRow]:
        """One mixture per grid point; rows come back with x ascending."""
        methods = self._methods(config.method)
        if len(methods) != 1:
            raise InvalidInputError("a sweep runs exactly one bound method", config.method)
        base = self.state_service.pure_state(spec)

        def point(x: float) -> SweepRow:
            rho = self.state_service.mix_with_identity(base, x)
            eig, _, (report,) = self.bound_reports(rho, config, methods)
            return SweepRow(
                x=x,
                value=report.value,
                raw_value=report.raw_value,
                dominance_ratio=eig.dominance_ratio,
                converged=report.converged,
            )

        return executor_manager.map(point, sorted(xs))

    def profile(self, rho: DensityMatrix, config: RunConfig) -> List[ProfileRow]:
        eig = MixedCriterionService.eigen_structure(rho, config.rank_tol)
        tset = MixedCriterionService.t_matrices(eig)
        fact = MixedCriterionService.kronecker_factorize(tset, config.trunc_tol)
        reports = MixedCriterionService.lower_bound_profile(
            fact, config.optimizer(), config.max_factors
        )
        return [
            ProfileRow(
                factors=report.factors_used,
                value=report.value,
                raw_value=report.raw_value,
                converged=report.converged,
            )
            for report in reports
        ]
