import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _optional_int(name: str) -> Optional[int]:
    value = os.getenv(name, "")
    return int(value) if value else None


class Settings:
    PROJECT_NAME: str = "tripsep"
    VERSION: str = "0.1.0"

    # Logging
    LOG_LEVEL: str = os.getenv("TRIPSEP_LOG_LEVEL", "INFO")

    # Pure-state criterion
    PURE_TOL: float = float(os.getenv("TRIPSEP_PURE_TOL", "1e-10"))
    DEGENERATE_NORM_TOL: float = float(os.getenv("TRIPSEP_DEGENERATE_NORM_TOL", "1e-14"))

    # Density-matrix invariants
    HERMITIAN_TOL: float = float(os.getenv("TRIPSEP_HERMITIAN_TOL", "1e-10"))
    TRACE_TOL: float = float(os.getenv("TRIPSEP_TRACE_TOL", "1e-10"))
    PSD_TOL: float = float(os.getenv("TRIPSEP_PSD_TOL", "1e-10"))

    # Mixed-state bounds
    RANK_TOL: float = float(os.getenv("TRIPSEP_RANK_TOL", "1e-12"))
    TRUNC_TOL: float = float(os.getenv("TRIPSEP_TRUNC_TOL", "1e-10"))
    MAX_FACTORS: Optional[int] = _optional_int("TRIPSEP_MAX_FACTORS")
    DIRECT_MAX_TUPLES: int = int(os.getenv("TRIPSEP_DIRECT_MAX_TUPLES", "1024"))
    EXPLICIT_A_MAX: int = int(os.getenv("TRIPSEP_EXPLICIT_A_MAX", "256"))

    # Optimizer
    RESTARTS: int = int(os.getenv("TRIPSEP_RESTARTS", "32"))
    MAX_ITERS: int = int(os.getenv("TRIPSEP_MAX_ITERS", "500"))
    OPT_TOL: float = float(os.getenv("TRIPSEP_OPT_TOL", "1e-8"))
    SEED: int = int(os.getenv("TRIPSEP_SEED", "0"))
    ALIGN_SWEEPS: int = int(os.getenv("TRIPSEP_ALIGN_SWEEPS", "25"))
    STALL_ITERS: int = int(os.getenv("TRIPSEP_STALL_ITERS", "50"))

    # Quasi-pure estimate
    QUASI_PURE_EPS: float = float(os.getenv("TRIPSEP_QUASI_PURE_EPS", "1e-12"))
    QUASI_PURE_MAX_RATIO: float = float(os.getenv("TRIPSEP_QUASI_PURE_MAX_RATIO", "0.5"))
    DEGENERACY_TOL: float = float(os.getenv("TRIPSEP_DEGENERACY_TOL", "1e-12"))

    # State generators
    SEMISEPARABLE_MIN_SCHMIDT: float = float(
        os.getenv("TRIPSEP_SEMISEPARABLE_MIN_SCHMIDT", "1e-3")
    )
    SEMISEPARABLE_MAX_DRAWS: int = int(os.getenv("TRIPSEP_SEMISEPARABLE_MAX_DRAWS", "100"))

    # Worker pool
    THREADS: int = int(os.getenv("TRIPSEP_THREADS", "1"))


# Global settings instance
settings = Settings()
