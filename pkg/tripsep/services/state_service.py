"""
Named states, seeded random ensembles and identity mixtures.
"""
import logging

import numpy as np

from tripsep.core.config import settings
from tripsep.core.errors import InvalidDimensionError, InvalidSpecError
from tripsep.models.states import DensityMatrix, PureStateTensor, check_dims
from tripsep.schemas.states import NAMED_STATES, RANDOM_STATES, StateSpec

logger = logging.getLogger(__name__)

# (flat index, amplitude) on dims (2, 2, 3); flat = i*6 + j*3 + k
GHZ_PRIME = ((0, 0.5), (7, 0.5), (4, 0.5), (11, 0.5))
W_PRIME = ((0, 1 / np.sqrt(3)), (4, 1 / np.sqrt(3)), (11, 1 / np.sqrt(3)))
# |001>, |010>, |100> on dims (2, 2, 2)
W_STATE = ((1, 1 / np.sqrt(3)), (2, 1 / np.sqrt(3)), (4, 1 / np.sqrt(3)))

DEFAULT_DIMS = {
    "ghz": (2, 2, 2),
    "w": (2, 2, 2),
    "ghz_prime": (2, 2, 3),
    "w_prime": (2, 2, 3),
}


def _spec_dims(spec: StateSpec):
    dims = spec.dims or DEFAULT_DIMS.get(spec.name, (2, 2, 2))
    try:
        return check_dims(dims)
    except InvalidDimensionError as e:
        raise InvalidSpecError(f"state {spec.name}: {e.detail}", e.value) from e


def _sparse_state(dims, entries) -> PureStateTensor:
    amplitudes = np.zeros(int(np.prod(dims)), dtype=complex)
    for index, value in entries:
        amplitudes[index] = value
    return PureStateTensor(dims=dims, amplitudes=amplitudes)


def _unit_vector(rng: np.random.Generator, shape) -> np.ndarray:
    v = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return v / np.linalg.norm(v)


class StateService:
    """Service for the pure-state and noise-mixture generators."""

    def named_state(self, spec: StateSpec) -> PureStateTensor:
        if spec.name not in NAMED_STATES:
            raise InvalidSpecError("not a named state", spec.name)
        dims = _spec_dims(spec)

        if spec.name == "ghz":
            n = dims[0]
            if dims != (n, n, n):
                raise InvalidSpecError("ghz requires equal local dimensions (n, n, n)", dims)
            step = n * n + n + 1
            return _sparse_state(dims, [(i * step, 1 / np.sqrt(n)) for i in range(n)])

        expected = DEFAULT_DIMS[spec.name]
        if dims != expected:
            raise InvalidSpecError(f"{spec.name} requires dims {expected}", dims)
        entries = {"w": W_STATE, "ghz_prime": GHZ_PRIME, "w_prime": W_PRIME}[spec.name]
        return _sparse_state(dims, entries)

    def random_state(self, spec: StateSpec) -> PureStateTensor:
        if spec.name not in RANDOM_STATES:
            raise InvalidSpecError("not a random state family", spec.name)
        if spec.seed is None:
            raise InvalidSpecError(f"{spec.name} requires a seed")
        dims = _spec_dims(spec)
        rng = np.random.default_rng(spec.seed)

        if spec.name == "random_pure":
            amplitudes = _unit_vector(rng, int(np.prod(dims)))
        elif spec.name == "random_product":
            a, b, c = (_unit_vector(rng, n) for n in dims)
            amplitudes = np.kron(np.kron(a, b), c)
        else:
            amplitudes = self._semiseparable(rng, dims, spec)

        amplitudes = amplitudes / np.linalg.norm(amplitudes)
        return PureStateTensor(dims=dims, amplitudes=amplitudes)

    def _semiseparable(self, rng: np.random.Generator, dims, spec: StateSpec) -> np.ndarray:
        """Entangled pair on the cut, product with a random vector on the remaining party."""
        floor = spec.min_schmidt or settings.SEMISEPARABLE_MIN_SCHMIDT
        n1, n2, n3 = dims
        shape, local, pattern = {
            "AB": ((n1, n2), n3, "ij,k->ijk"),
            "AC": ((n1, n3), n2, "ik,j->ijk"),
            "BC": ((n2, n3), n1, "jk,i->ijk"),
        }[spec.cut]

        for draw in range(settings.SEMISEPARABLE_MAX_DRAWS):
            pair = _unit_vector(rng, shape)
            schmidt = np.linalg.svd(pair, compute_uv=False)
            if schmidt[1] >= floor:
                break
            logger.debug(f"Rejected draw {draw}: second Schmidt coefficient {schmidt[1]:g}")
        else:
            raise InvalidSpecError(
                f"no draw reached second Schmidt coefficient >= {floor:g} "
                f"within {settings.SEMISEPARABLE_MAX_DRAWS} draws", spec.seed
            )
        return np.einsum(pattern, pair, _unit_vector(rng, local)).ravel()

    def pure_state(self, spec: StateSpec) -> PureStateTensor:
        if spec.name in NAMED_STATES:
            return self.named_state(spec)
        return self.random_state(spec)

    def mix_with_identity(self, psi: PureStateTensor, x: float) -> DensityMatrix:
        """x |psi><psi| + (1 - x) I/d, with psi normalized first."""
        x = float(x)
        if not 0.0 <= x <= 1.0:
            raise InvalidSpecError("mixing weight must satisfy 0 <= x <= 1", x)
        if psi.norm <= settings.DEGENERATE_NORM_TOL:
            raise InvalidSpecError("cannot mix a zero state", psi.norm)
        v = psi.amplitudes / psi.norm
        d = psi.dim
        matrix = x * np.outer(v, v.conj()) + (1.0 - x) * np.eye(d) / d
        return DensityMatrix(dims=psi.dims, matrix=matrix)

    def noise_mixture(self, spec: StateSpec, x: float) -> DensityMatrix:
        return self.mix_with_identity(self.pure_state(spec), x)
