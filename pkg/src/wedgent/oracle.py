"""Density-matrix cross-checks for the wedge measures.

Nothing here computes a 2x2 minor. The measures are recovered from reduced
density matrix purities, Schmidt coefficients, and the spin-flip overlap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .measures import MeasureConfig, normalization_constant
from .states import PureState, normalize
from .unfolding import gram_matrix, unfold

__all__ = [
    "PuritySummary",
    "purities",
    "schmidt_values",
    "oracle_measure",
    "wootters_pure_concurrence",
]

_SIGMA_Y = np.array([[0, -1j], [1j, 0]])


@dataclass(frozen=True)
class PuritySummary:
    per_mode_purity: tuple[float, ...]
    schmidt_values_mode1: tuple[float, ...] | None


def _unit(state: PureState, tol: float = 1e-9) -> PureState:
    return normalize(state) if abs(state.norm - 1.0) > tol else state


def schmidt_values(state: PureState) -> np.ndarray:
    """Descending singular values of the mode-1 unfolding."""
    return np.linalg.svd(unfold(state, 1).entries, compute_uv=False)


def purities(state: PureState) -> PuritySummary:
    state = _unit(state)
    per_mode = []
    for j in range(1, state.num_subsystems + 1):
        rho = gram_matrix(unfold(state, j))
        per_mode.append(float(np.trace(rho @ rho).real))
    schmidt = tuple(float(s) for s in schmidt_values(state)) if state.num_subsystems == 2 else None
    return PuritySummary(tuple(per_mode), schmidt)


def _dispatch_path(dims) -> str:
    if len(dims) == 2:
        return "bipartite"
    if all(n == 2 for n in dims):
        return "multiqubit"
    return "multipartite"


def oracle_measure(state: PureState, config: MeasureConfig | None = None, via: str = "purity") -> float:
    """Measure value from ``1 - Tr rho_j^2`` (``via="purity"``) or, for two
    parties, from Schmidt coefficients ``2 sum_{a<b} l_a^2 l_b^2`` (``via="schmidt"``).

    Uses the same path selection and constant as :func:`measures.measure_auto`.
    """
    config = config or MeasureConfig()
    if state.num_subsystems < 2:
        raise ArgumentError(f"oracle measure needs m >= 2, got {state.num_subsystems}")
    state = _unit(state, config.norm_tolerance)
    path = _dispatch_path(state.dims)
    c = normalization_constant(path, state.dims, config)
    if via == "schmidt":
        if path != "bipartite":
            raise ArgumentError("the Schmidt oracle applies to two-party states only")
        p = schmidt_values(state) ** 2
        # 2 sum_{a<b} p_a p_b = (sum p)^2 - sum p^2
        linear_entropy = float(np.sum(p)) ** 2 - float(np.sum(p * p))
        return math.sqrt(max(c * linear_entropy, 0.0))
    if via != "purity":
        raise ArgumentError(f"unknown oracle route {via!r}")
    summary = purities(state)
    modes = summary.per_mode_purity[:1] if path == "bipartite" else summary.per_mode_purity
    total = sum(1.0 - p for p in modes)
    return math.sqrt(max(c * total, 0.0))


def wootters_pure_concurrence(state: PureState) -> float:
    """|<psi| sigma_y (x) sigma_y |psi*>| for a pure two-qubit state."""
    if state.dims != (2, 2):
        raise ArgumentError(f"Wootters concurrence needs dims (2, 2), got {state.dims}")
    psi = _unit(state).amplitudes
    flipped = np.kron(_SIGMA_Y, _SIGMA_Y) @ psi.conj()
    return float(abs(np.vdot(psi, flipped)))
