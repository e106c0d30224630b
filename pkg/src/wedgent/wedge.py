"""Pairwise wedge products v ^ w = v (x) w - w (x) v, stored as 2x2 minors."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArgumentError, DimensionError

__all__ = [
    "MinorTable",
    "wedge",
    "alt2",
    "wedge_norm_sq",
    "lagrange_check",
    "row_pair_sum",
]


@lru_cache(maxsize=64)
def _pair_indices(d: int) -> tuple[np.ndarray, np.ndarray]:
    ia, ib = np.triu_indices(d, k=1)
    ia.setflags(write=False)
    ib.setflags(write=False)
    return ia, ib


@dataclass(frozen=True, eq=False)
class MinorTable:
    """Independent components of an antisymmetric 2-tensor.

    ``minors`` lists ``v[a] w[b] - w[a] v[b]`` for column pairs ``a < b`` in
    lexicographic order. Indexing with a 1-based pair ``(a, b)`` returns one
    minor; ``(b, a)`` returns its negative, ``(a, a)`` zero.
    """

    length: int
    minors: np.ndarray

    def pairs(self) -> list[tuple[int, int]]:
        ia, ib = _pair_indices(self.length)
        return [(int(a) + 1, int(b) + 1) for a, b in zip(ia, ib)]

    def as_dict(self) -> dict[tuple[int, int], complex]:
        return {p: complex(x) for p, x in zip(self.pairs(), self.minors)}

    def __len__(self):
        return self.minors.size

    def __getitem__(self, pair: tuple[int, int]) -> complex:
        a, b = pair
        if not (1 <= a <= self.length and 1 <= b <= self.length):
            raise ArgumentError(f"column pair {pair} out of range 1..{self.length}")
        if a == b:
            return 0j
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        d = self.length
        # offset of (a, b) in row-major upper-triangle order, 0-based a, b
        a0, b0 = a - 1, b - 1
        k = a0 * (2 * d - a0 - 1) // 2 + (b0 - a0 - 1)
        return sign * complex(self.minors[k])


def _pair_vectors(v, w) -> tuple[np.ndarray, np.ndarray]:
    v = np.asarray(v, dtype=complex).reshape(-1)
    w = np.asarray(w, dtype=complex).reshape(-1)
    if v.size != w.size:
        raise DimensionError(f"wedge of vectors with lengths {v.size} and {w.size}")
    if v.size < 1:
        raise ArgumentError("wedge needs vectors of length >= 1")
    return v, w


def wedge(v, w) -> MinorTable:
    v, w = _pair_vectors(v, w)
    ia, ib = _pair_indices(v.size)
    # same operand order in both products: wedge(v, v) is exactly zero
    minors = v[ia] * w[ib] - w[ia] * v[ib]
    minors.setflags(write=False)
    return MinorTable(v.size, minors)


def alt2(v, w) -> np.ndarray:
    """Full D x D antisymmetric tensor v (x) w - w (x) v, flattened row-major."""
    v, w = _pair_vectors(v, w)
    return (np.outer(v, w) - np.outer(w, v)).reshape(-1)


def wedge_norm_sq(t: MinorTable) -> float:
    """Squared norm of the full antisymmetric tensor: 2 * sum |minor|^2."""
    m = t.minors
    return 2.0 * float(np.sum(m.real * m.real + m.imag * m.imag))


def lagrange_check(v, w) -> tuple[float, float]:
    """(||v ^ w||^2, 2 (||v||^2 ||w||^2 - |<v, w>|^2)); equal by Lagrange's identity."""
    v, w = _pair_vectors(v, w)
    lhs = wedge_norm_sq(wedge(v, w))
    nv = float(np.vdot(v, v).real)
    nw = float(np.vdot(w, w).real)
    rhs = 2.0 * (nv * nw - abs(np.vdot(v, w)) ** 2)
    return lhs, rhs


def row_pair_sum(matrix) -> float:
    """Sum of ||v_mu ^ v_nu||^2 over all row pairs mu < nu, lexicographic order."""
    mat = np.asarray(matrix, dtype=complex)
    total = 0.0
    for mu in range(mat.shape[0]):
        for nu in range(mu + 1, mat.shape[0]):
            total += wedge_norm_sq(wedge(mat[mu], mat[nu]))
    return total
