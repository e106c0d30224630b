"""Pure multipartite states stored as flat row-major amplitude vectors.

Subsystems and basis levels are numbered from 1 at the public surface, so
``|1,1>`` is the first computational basis state of a two-qubit system.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ArgumentError, DegenerateStateError, DimensionError

__all__ = [
    "PureState",
    "LocalUnitary",
    "make_state",
    "normalize",
    "named_state",
    "bell",
    "ghz",
    "w_state",
    "max_entangled",
    "basis_state",
    "product_state",
    "random_state",
    "random_product_state",
    "random_unitary",
    "apply_local_unitary",
    "apply_local_operator",
    "permute_subsystems",
    "flat_index",
    "multi_index",
]


def _check_dims(dims: Iterable[int]) -> tuple[int, ...]:
    try:
        dims = tuple(int(d) for d in dims)
    except (TypeError, ValueError) as exc:
        raise ArgumentError(f"dims must be a sequence of integers, got {dims!r}") from exc
    if not dims:
        raise ArgumentError("dims must be nonempty")
    if any(d < 1 for d in dims):
        raise ArgumentError(f"every subsystem dimension must be >= 1, got {dims}")
    return dims


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PureState:
    """Complex amplitude vector over ``len(dims)`` subsystems.

    ``amplitudes[flat_index(dims, k)]`` is the coefficient of ``|k_1,...,k_m>``.
    The amplitude array is read-only; operations return new states.
    """

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.asarray(self.amplitudes).reshape(-1)
        if amps.size != math.prod(dims):
            raise DimensionError(
                f"{amps.size} amplitudes given for dims {dims} (need {math.prod(dims)})"
            )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @property
    def num_subsystems(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return self.amplitudes.size

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to an array of shape ``dims`` (a copy)."""
        return self.amplitudes.reshape(self.dims).copy()

    def amplitude(self, *index: int) -> complex:
        """Coefficient at the 1-based multi-index ``index``."""
        return complex(self.amplitudes[flat_index(self.dims, index)])

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.amplitudes, other.amplitudes)

    def __hash__(self):
        return hash((self.dims, self.amplitudes.tobytes()))

    def __repr__(self):
        return f"PureState(dims={self.dims}, norm={self.norm:.6g})"


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    """A unitary acting on one subsystem (1-based ``subsystem``)."""

    subsystem: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionError(f"local unitary must be square, got shape {mat.shape}")
        if not np.allclose(mat.conj().T @ mat, np.eye(mat.shape[0]), rtol=0, atol=1e-10):
            raise ArgumentError("matrix is not unitary within 1e-10")
        if self.subsystem < 1:
            raise ArgumentError(f"subsystem index is 1-based, got {self.subsystem}")
        object.__setattr__(self, "matrix", _frozen(mat))


def flat_index(dims: Sequence[int], index: Sequence[int]) -> int:
    """Row-major flat offset (0-based) of a 1-based multi-index."""
    if len(index) != len(dims):
        raise ArgumentError(f"multi-index {tuple(index)} has wrong length for dims {tuple(dims)}")
    offset = 0
    for k, n in zip(index, dims):
        if not 1 <= k <= n:
            raise ArgumentError(f"level {k} out of range 1..{n}")
        offset = offset * n + (k - 1)
    return offset


def multi_index(dims: Sequence[int], offset: int) -> tuple[int, ...]:
    """Inverse of :func:`flat_index`."""
    total = math.prod(dims)
    if not 0 <= offset < total:
        raise ArgumentError(f"flat offset {offset} out of range 0..{total - 1}")
    index = []
    for n in reversed(dims):
        offset, k = divmod(offset, n)
        index.append(k + 1)
    return tuple(reversed(index))


def make_state(dims: Sequence[int], amplitudes: Iterable[complex]) -> PureState:
    """Build a state from dims and flat amplitudes, stored verbatim."""
    return PureState(_check_dims(dims), np.asarray(list(amplitudes), dtype=complex))


def normalize(state: PureState) -> PureState:
    nrm = np.linalg.norm(state.amplitudes)
    if nrm == 0.0:
        raise DegenerateStateError("cannot normalize the zero vector")
    return PureState(state.dims, state.amplitudes / nrm)


def basis_state(dims: Sequence[int], index: Sequence[int]) -> PureState:
    dims = _check_dims(dims)
    amps = np.zeros(math.prod(dims), dtype=complex)
    amps[flat_index(dims, index)] = 1.0
    return PureState(dims, amps)


def bell() -> PureState:
    """(|1,1> + |2,2>)/sqrt(2)."""
    return max_entangled(2)


def ghz(m: int) -> PureState:
    if m < 2:
        raise ArgumentError(f"ghz needs m >= 2, got {m}")
    dims = (2,) * m
    amps = np.zeros(2**m, dtype=complex)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return PureState(dims, amps)


def w_state(m: int) -> PureState:
    """Equal superposition of the m single-excitation states |1..2_j..1>."""
    if m < 2:
        raise ArgumentError(f"w needs m >= 2, got {m}")
    dims = (2,) * m
    amps = np.zeros(2**m, dtype=complex)
    for j in range(m):
        amps[1 << (m - 1 - j)] = 1 / math.sqrt(m)
    return PureState(dims, amps)


def max_entangled(d: int) -> PureState:
    """sum_i |i,i> / sqrt(d) on dims (d, d)."""
    if d < 2:
        raise ArgumentError(f"max_entangled needs d >= 2, got {d}")
    amps = np.zeros(d * d, dtype=complex)
    amps[:: d + 1] = 1 / math.sqrt(d)
    return PureState((d, d), amps)


def product_state(factors: Sequence[Sequence[complex]]) -> PureState:
    """Normalized tensor product of single-subsystem vectors."""
    if not factors:
        raise ArgumentError("product_state needs at least one factor")
    vecs = [np.asarray(f, dtype=complex).reshape(-1) for f in factors]
    amps = vecs[0]
    for v in vecs[1:]:
        amps = np.kron(amps, v)
    return normalize(PureState(tuple(v.size for v in vecs), amps))


_NAMED = {
    "bell": (0, lambda: bell()),
    "ghz": (1, ghz),
    "w": (1, w_state),
    "max_entangled": (1, max_entangled),
    "maxent": (1, max_entangled),
    "product": (1, lambda dims: basis_state(dims, [1] * len(_check_dims(dims)))),
}


def named_state(name: str, *args) -> PureState:
    """Canonical fixture states.

    ``named_state("bell")``, ``named_state("ghz", 3)``, ``named_state("w", 4)``,
    ``named_state("max_entangled", 3)`` and ``named_state("product", [2, 3])``
    (the all-ones basis state on the given dims).
    """
    try:
        arity, ctor = _NAMED[name.lower()]
    except KeyError:
        raise ArgumentError(f"unknown state name {name!r}; choose from {sorted(_NAMED)}") from None
    if len(args) != arity:
        raise ArgumentError(f"{name} takes {arity} argument(s), got {len(args)}")
    return ctor(*args)


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2)


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_state(dims: Sequence[int], seed: int | np.random.Generator | None = None) -> PureState:
    """Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.

    ``seed`` may also be a ``numpy.random.Generator`` to draw from a shared stream.
    """
    dims = _check_dims(dims)
    rng = _as_rng(seed)
    return normalize(PureState(dims, _complex_gaussian(rng, math.prod(dims))))


def random_product_state(dims: Sequence[int], seed: int | np.random.Generator | None = None) -> PureState:
    dims = _check_dims(dims)
    rng = _as_rng(seed)
    return product_state([_complex_gaussian(rng, n) for n in dims])


def random_unitary(n: int, seed: int | np.random.Generator | None = None) -> np.ndarray:
    """Haar-distributed n x n unitary (QR of a Ginibre matrix with phase fix)."""
    rng = _as_rng(seed)
    q, r = np.linalg.qr(_complex_gaussian(rng, (n, n)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def apply_local_operator(state: PureState, subsystem: int, matrix) -> PureState:
    """Contract ``matrix`` against the index of ``subsystem`` (1-based).

    No unitarity check and no renormalization; used for local filters too.
    """
    m = state.num_subsystems
    if not 1 <= subsystem <= m:
        raise ArgumentError(f"subsystem {subsystem} out of range 1..{m}")
    mat = np.asarray(matrix, dtype=complex)
    n = state.dims[subsystem - 1]
    if mat.shape != (n, n):
        raise ArgumentError(f"operator shape {mat.shape} does not match subsystem dimension {n}")
    t = np.tensordot(mat, state.tensor(), axes=([1], [subsystem - 1]))
    t = np.moveaxis(t, 0, subsystem - 1)
    return PureState(state.dims, t.reshape(-1))


def apply_local_unitary(state: PureState, u: LocalUnitary) -> PureState:
    return apply_local_operator(state, u.subsystem, u.matrix)


def permute_subsystems(state: PureState, order: Sequence[int]) -> PureState:
    """Relabel subsystems: new subsystem i is old subsystem ``order[i]`` (1-based)."""
    m = state.num_subsystems
    if sorted(order) != list(range(1, m + 1)):
        raise ArgumentError(f"{tuple(order)} is not a permutation of 1..{m}")
    axes = [k - 1 for k in order]
    t = np.transpose(state.tensor(), axes)
    return PureState(tuple(state.dims[a] for a in axes), t.reshape(-1))
