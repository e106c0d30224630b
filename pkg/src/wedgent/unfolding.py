"""Mode-j matricizations of a state's coefficient tensor."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .states import PureState

__all__ = ["Unfolding", "unfold", "unfoldings", "row", "gram_matrix"]


@dataclass(frozen=True, eq=False)
class Unfolding:
    """Matrix with subsystem ``mode``'s level as row and the rest as columns.

    Columns enumerate the remaining subsystems in ascending order, row-major
    (last remaining subsystem fastest).
    """

    mode: int
    entries: np.ndarray

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def unfold(state: PureState, mode: int) -> Unfolding:
    m = state.num_subsystems
    if not 1 <= mode <= m:
        raise ArgumentError(f"mode {mode} out of range 1..{m}")
    t = np.moveaxis(state.tensor(), mode - 1, 0)
    mat = np.ascontiguousarray(t.reshape(state.dims[mode - 1], -1))
    mat.setflags(write=False)
    return Unfolding(mode, mat)


def unfoldings(state: PureState) -> list[Unfolding]:
    return [unfold(state, j) for j in range(1, state.num_subsystems + 1)]


def row(u: Unfolding, r: int) -> np.ndarray:
    """The 1-based row ``r`` of ``u``, as a fresh vector."""
    if not 1 <= r <= u.rows:
        raise ArgumentError(f"row {r} out of range 1..{u.rows}")
    return u.entries[r - 1].copy()


def gram_matrix(u: Unfolding) -> np.ndarray:
    """Row inner products ``G[a, b] = sum_c M[a, c] conj(M[b, c])``.

    This is the reduced density matrix of subsystem ``u.mode``.
    """
    return u.entries @ u.entries.conj().T
