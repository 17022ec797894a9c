"""
Pydantic schemas for run and optimizer configuration.
"""
from typing import Literal, Optional

from pydantic import (
    BaseModel, ConfigDict, Field, NonNegativeFloat, NonNegativeInt, PositiveFloat, PositiveInt,
)

from tripsep.core.config import settings

Method = Literal["pure", "direct", "kronecker", "analytic", "quasipure", "all"]
OutputFormat = Literal["json", "csv"]


class OptimizerConfig(BaseModel):
    """Multistart search over the unit-norm complex parameter vector z."""
    model_config = ConfigDict(frozen=True)

    restarts: PositiveInt = Field(default_factory=lambda: settings.RESTARTS,
                                  description="Number of seeded random starts")
    max_iters: PositiveInt = Field(default_factory=lambda: settings.MAX_ITERS,
                                   description="Iteration cap of each local refinement")
    tol: PositiveFloat = Field(default_factory=lambda: settings.OPT_TOL,
                               description="Convergence tolerance on the objective")
    seed: NonNegativeInt = Field(default_factory=lambda: settings.SEED)
    align_sweeps: NonNegativeInt = Field(default_factory=lambda: settings.ALIGN_SWEEPS,
                                         description="Fixed-point sweeps of the alignment start")
    stall_iters: PositiveInt = Field(default_factory=lambda: settings.STALL_ITERS,
                                     description="Iterations without a gain above tol")


class RunConfig(BaseModel):
    """Everything a CLI command needs; echoed into every report."""
    model_config = ConfigDict(frozen=True)

    command: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    method: Method = "all"
    tol: NonNegativeFloat = Field(default_factory=lambda: settings.PURE_TOL,
                                  description="Verdict threshold on the reported value")
    rank_tol: float = Field(default_factory=lambda: settings.RANK_TOL, gt=0.0, lt=1.0)
    trunc_tol: float = Field(default_factory=lambda: settings.TRUNC_TOL, gt=0.0, lt=1.0)
    max_factors: Optional[PositiveInt] = Field(default_factory=lambda: settings.MAX_FACTORS)
    restarts: PositiveInt = Field(default_factory=lambda: settings.RESTARTS)
    max_iters: PositiveInt = Field(default_factory=lambda: settings.MAX_ITERS)
    opt_tol: PositiveFloat = Field(default_factory=lambda: settings.OPT_TOL)
    seed: NonNegativeInt = Field(default_factory=lambda: settings.SEED)
    threads: PositiveInt = Field(default_factory=lambda: settings.THREADS)
    output_format: OutputFormat = "json"

    def optimizer(self) -> OptimizerConfig:
        return OptimizerConfig(
            restarts=self.restarts,
            max_iters=self.max_iters,
            tol=self.opt_tol,
            seed=self.seed,
        )
