import numpy as np
import pytest

from tripsep.models.states import DensityMatrix, PureStateTensor
from tripsep.schemas.runs import OptimizerConfig
from tripsep.schemas.states import StateSpec
from tripsep.services.state_service import StateService


def random_density(dims, rank: int, seed: int) -> DensityMatrix:
    """Seeded rank-``rank`` density matrix X X^dagger / tr."""
    rng = np.random.default_rng(seed)
    d = int(np.prod(dims))
    X = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    matrix = X @ X.conj().T
    matrix = (matrix + matrix.conj().T) / 2
    return DensityMatrix(dims=dims, matrix=matrix / np.trace(matrix).real)


def projector(state: PureStateTensor) -> DensityMatrix:
    v = state.amplitudes / state.norm
    return DensityMatrix(dims=state.dims, matrix=np.outer(v, v.conj()))


def maximally_mixed(dims) -> DensityMatrix:
    d = int(np.prod(dims))
    return DensityMatrix(dims=dims, matrix=np.eye(d) / d)


@pytest.fixture
def state_service():
    return StateService()


@pytest.fixture
def small_cfg():
    return OptimizerConfig(restarts=4, max_iters=60, tol=1e-8, seed=0, align_sweeps=25)


@pytest.fixture
def ghz(state_service):
    return state_service.named_state(StateSpec(name="ghz"))


@pytest.fixture
def w_state(state_service):
    return state_service.named_state(StateSpec(name="w"))


@pytest.fixture
def ghz_prime(state_service):
    return state_service.named_state(StateSpec(name="ghz_prime"))


@pytest.fixture
def w_prime(state_service):
    return state_service.named_state(StateSpec(name="w_prime"))
