import math

import numpy as np
import pytest

from conftest import maximally_mixed, projector
from tripsep.models.states import DensityMatrix
from tripsep.schemas.states import StateSpec
from tripsep.services.mixed_criterion_service import MixedCriterionService
from tripsep.services.pure_criterion_service import PureCriterionService
from tripsep.services.quasi_pure_service import (
    AMBIGUOUS_DOMINANT_FLAG, OUTSIDE_REGIME_FLAG, SEPARABLE_DOMINANT_FLAG, QuasiPureService,
)

NOISE_GRID = [round(0.3 + 0.1 * i, 12) for i in range(8)]


def estimate(rho):
    eig = MixedCriterionService.eigen_structure(rho)
    tset = MixedCriterionService.t_matrices(eig)
    tau = QuasiPureService.tau_matrix(eig, tset)
    return tau, QuasiPureService.quasi_pure_estimate(tau)


def test_pure_state_tau_is_the_grid_concurrence(state_service):
    for seed in range(5):
        spec = StateSpec(name="random_pure", dims=(2, 2, 3), seed=seed)
        state = state_service.random_state(spec)
        tau, report = estimate(projector(state))
        expected = PureCriterionService.grid_concurrence(state)
        assert tau.tau.shape == (1, 1)
        assert abs(tau.tau[0, 0] - expected) <= 1e-10
        assert report.value == pytest.approx(expected, abs=1e-10)
        assert report.method == "quasipure"


def test_separable_dominant_eigenvector_is_flagged():
    matrix = 0.1 * np.eye(8) / 8
    matrix[0, 0] += 0.9
    tau, report = estimate(DensityMatrix(dims=(2, 2, 2), matrix=matrix))
    np.testing.assert_array_equal(tau.tau, np.zeros((8, 8)))
    assert SEPARABLE_DOMINANT_FLAG in tau.flags
    assert report.value == 0.0
    assert report.flags == list(tau.flags)


def test_tau_is_hermitian_psd(ghz_prime, state_service):
    rho = state_service.mix_with_identity(ghz_prime, 0.5)
    tau, _ = estimate(rho)
    assert np.abs(tau.tau - tau.tau.conj().T).max() <= 1e-10
    assert np.linalg.eigvalsh(tau.tau).min() >= -1e-10
    assert tau.tau[0, 0].real == pytest.approx(math.sqrt(tau.dominant_weight), abs=1e-10)


def test_dominance_diagnostics(ghz_prime, state_service):
    tau, report = estimate(state_service.mix_with_identity(ghz_prime, 0.3))
    ratio = (0.7 / 12) / (0.3 + 0.7 / 12)
    assert tau.dominance_ratio == pytest.approx(ratio, abs=1e-12)
    assert report.dominance_ratio == tau.dominance_ratio
    assert tau.flags == ()

    tau, _ = estimate(maximally_mixed((2, 2, 2)))
    assert AMBIGUOUS_DOMINANT_FLAG in tau.flags
    assert OUTSIDE_REGIME_FLAG in tau.flags


@pytest.mark.parametrize("name", ["ghz_prime", "w_prime"])
def test_noisy_reference_states_are_detected(name, state_service):
    for x in NOISE_GRID:
        _, report = estimate(state_service.noise_mixture(StateSpec(name=name), x))
        assert report.value > 0, x


@pytest.mark.parametrize("name, expected", [("ghz_prime", 1.5), ("w_prime", 2 * math.sqrt(5) / 3)])
def test_noiseless_limit(name, expected, state_service):
    _, report = estimate(state_service.noise_mixture(StateSpec(name=name), 1.0))
    assert report.value == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("x", [0.3, 0.5, 0.7, 1.0])
def test_noisy_qutrit_ghz_is_detected(x, state_service):
    rho = state_service.noise_mixture(StateSpec(name="ghz", dims=(3, 3, 3)), x)
    _, report = estimate(rho)
    assert report.value > 0


def test_noisy_semiseparable_states_are_detected(state_service):
    for seed in range(20):
        spec = StateSpec(name="random_semiseparable", dims=(2, 2, 3), seed=seed, cut="AB",
                         min_schmidt=0.3)
        _, report = estimate(state_service.noise_mixture(spec, 0.9))
        assert report.value > 0, seed


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 3)])
def test_maximally_mixed_estimate_vanishes(dims):
    tau, report = estimate(maximally_mixed(dims))
    assert report.value == 0.0
    assert report.raw_value == 0.0
    assert SEPARABLE_DOMINANT_FLAG in tau.flags
