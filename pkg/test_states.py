import math

import numpy as np
import pytest
from pydantic import ValidationError

from tripsep.core.errors import InvalidDimensionError, InvalidSpecError, InvalidStateError
from tripsep.models.states import DensityMatrix, PureStateTensor
from tripsep.schemas.states import StateSpec
from tripsep.services.mixed_criterion_service import MixedCriterionService
from tripsep.services.pure_criterion_service import PureCriterionService


def test_ghz_prime_amplitudes(ghz_prime):
    expected = np.zeros(12)
    # |000>, |101>, |011>, |112>
    expected[[0, 7, 4, 11]] = 0.5
    assert ghz_prime.dims == (2, 2, 3)
    np.testing.assert_array_equal(ghz_prime.amplitudes, expected)


def test_w_prime_amplitudes(w_prime):
    expected = np.zeros(12)
    expected[[0, 4, 11]] = 1 / math.sqrt(3)
    np.testing.assert_array_equal(w_prime.amplitudes, expected)


def test_ghz_on_qutrits(state_service):
    state = state_service.named_state(StateSpec(name="ghz", dims=(3, 3, 3)))
    expected = np.zeros(27)
    expected[[0, 13, 26]] = 1 / math.sqrt(3)
    np.testing.assert_array_equal(state.amplitudes, expected)


@pytest.mark.parametrize("name", ["ghz", "w", "ghz_prime", "w_prime"])
def test_named_states_have_unit_norm(name, state_service):
    state = state_service.named_state(StateSpec(name=name))
    assert abs(state.norm - 1.0) <= 1e-12


@pytest.mark.parametrize("spec", [
    StateSpec(name="ghz_prime", dims=(2, 2, 2)),
    StateSpec(name="w", dims=(2, 2, 3)),
    StateSpec(name="ghz", dims=(2, 3, 3)),
    StateSpec(name="ghz", dims=(1, 1, 1)),
    StateSpec(name="random_pure", seed=1),
])
def test_named_state_rejects_bad_specs(spec, state_service):
    with pytest.raises(InvalidSpecError):
        state_service.named_state(spec)


@pytest.mark.parametrize("name", ["random_product", "random_pure", "random_semiseparable"])
def test_random_states_are_deterministic(name, state_service):
    spec = StateSpec(name=name, dims=(2, 2, 3), seed=42)
    first = state_service.random_state(spec)
    second = state_service.random_state(spec)
    assert first.amplitudes.tobytes() == second.amplitudes.tobytes()
    assert abs(first.norm - 1.0) <= 1e-12


def test_random_state_requires_seed(state_service):
    with pytest.raises(InvalidSpecError):
        state_service.random_state(StateSpec(name="random_pure"))


def test_random_state_defaults_to_qubits(state_service):
    state = state_service.random_state(StateSpec(name="random_pure", seed=0))
    assert state.dims == (2, 2, 2)


def test_random_product_is_separable(state_service):
    for seed in range(20):
        state = state_service.random_state(StateSpec(name="random_product", seed=seed))
        assert PureCriterionService.grid_concurrence(state) < 1e-10


@pytest.mark.parametrize("cut, axes", [("AB", (0, 1)), ("AC", (0, 2)), ("BC", (1, 2))])
def test_semiseparable_states(cut, axes, state_service):
    for seed in range(10):
        spec = StateSpec(name="random_semiseparable", dims=(2, 2, 3), seed=seed, cut=cut)
        state = state_service.random_state(spec)
        assert PureCriterionService.grid_concurrence(state) > 1e-6

        # product across (pair | remaining party)
        tensor = state.tensor()
        rest = [axis for axis in range(3) if axis not in axes][0]
        matrix = np.moveaxis(tensor, rest, -1).reshape(-1, state.dims[rest])
        singular = np.linalg.svd(matrix, compute_uv=False)
        assert singular[1] < 1e-12


def test_semiseparable_schmidt_floor(state_service):
    for seed in range(10):
        spec = StateSpec(name="random_semiseparable", dims=(2, 2, 3), seed=seed, min_schmidt=0.3)
        # (pair, third party) matrix has rank one; its left factor is the pair state
        matrix = state_service.random_state(spec).amplitudes.reshape(4, 3)
        u, s, _ = np.linalg.svd(matrix)
        pair_state = (u[:, 0] * s[0]).reshape(2, 2)
        assert np.linalg.svd(pair_state, compute_uv=False)[1] >= 0.3 - 1e-12


def test_spec_rejects_large_schmidt_floor():
    with pytest.raises(ValidationError):
        StateSpec(name="random_semiseparable", seed=1, min_schmidt=0.9)


def test_mix_limits(ghz_prime, state_service):
    pure = state_service.mix_with_identity(ghz_prime, 1.0)
    eig = MixedCriterionService.eigen_structure(pure)
    assert eig.rank == 1

    mixed = state_service.mix_with_identity(ghz_prime, 0.0)
    np.testing.assert_allclose(np.linalg.eigvalsh(mixed.matrix), np.full(12, 1 / 12), atol=1e-15)


def test_mix_spectrum(ghz_prime, state_service):
    rho = state_service.mix_with_identity(ghz_prime, 0.5)
    assert abs(np.trace(rho.matrix) - 1.0) <= 1e-12
    values = np.sort(np.linalg.eigvalsh(rho.matrix))[::-1]
    expected = np.array([0.5 + 1 / 24] + [1 / 24] * 11)
    np.testing.assert_allclose(values, expected, atol=1e-12)


@pytest.mark.parametrize("x", [-0.1, 1.5])
def test_mix_rejects_weight_out_of_range(x, ghz_prime, state_service):
    with pytest.raises(InvalidSpecError):
        state_service.mix_with_identity(ghz_prime, x)


def test_noise_mixture_of_random_state(state_service):
    spec = StateSpec(name="random_pure", dims=(2, 2, 3), seed=9)
    rho = state_service.noise_mixture(spec, 0.4)
    psi = state_service.random_state(spec).amplitudes
    expected = 0.4 * np.outer(psi, psi.conj()) + 0.6 * np.eye(12) / 12
    np.testing.assert_allclose(rho.matrix, expected, atol=1e-15)


def test_density_matrix_invariants():
    with pytest.raises(InvalidStateError, match="Hermitian"):
        DensityMatrix(dims=(2, 2, 2), matrix=np.triu(np.ones((8, 8))) / 8)
    with pytest.raises(InvalidStateError, match="trace"):
        DensityMatrix(dims=(2, 2, 2), matrix=np.eye(8) / 4)
    not_psd = np.diag([1.5, -0.5, 0, 0, 0, 0, 0, 0])
    with pytest.raises(InvalidStateError, match="positive semidefinite"):
        MixedCriterionService.eigen_structure(DensityMatrix(dims=(2, 2, 2), matrix=not_psd))


def test_pure_state_tensor_checks_length():
    with pytest.raises(InvalidDimensionError, match=r"n1\*n2\*n3"):
        PureStateTensor(dims=(2, 2, 3), amplitudes=np.ones(8))
