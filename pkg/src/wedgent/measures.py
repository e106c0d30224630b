"""Wedge-product entanglement measures for pure states.

Every measure has the form ``E = sqrt(c * sum_j S_j)`` where ``S_j`` is the
sum of ``||v_mu ^ v_nu||^2`` over the row pairs of the mode-j unfolding and
``c`` is a normalization constant chosen by :class:`MeasureConfig`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import ArgumentError
from .states import PureState, normalize
from .unfolding import unfold
from .wedge import row_pair_sum

__all__ = [
    "Normalization",
    "MeasureConfig",
    "MeasureReport",
    "normalization_constant",
    "mode_contribution",
    "bipartite_measure",
    "two_qubit_concurrence",
    "multiqubit_measure",
    "multipartite_measure",
    "measure_auto",
]


class Normalization(str, enum.Enum):
    PAPER = "paper"
    UNIT_MAX = "unit_max"


@dataclass(frozen=True)
class MeasureConfig:
    """``normalization`` picks the constant; inputs whose norm differs from 1
    by more than ``norm_tolerance`` are renormalized (and flagged)."""

    normalization: Normalization = Normalization.PAPER
    norm_tolerance: float = 1e-9

    def __post_init__(self):
        try:
            object.__setattr__(self, "normalization", Normalization(self.normalization))
        except ValueError:
            raise ArgumentError(f"unknown normalization {self.normalization!r}") from None
        if not self.norm_tolerance > 0:
            raise ArgumentError(f"norm_tolerance must be > 0, got {self.norm_tolerance}")


@dataclass(frozen=True)
class MeasureReport:
    value: float
    mode_contributions: tuple[float, ...]
    renormalized: bool
    config_used: MeasureConfig
    path: str
    constant: float = field(default=float("nan"))


def normalization_constant(path: str, dims, config: MeasureConfig) -> float:
    """Constant multiplying the summed mode contributions for a given path.

    ``bipartite``: 2 (paper) or d/(d-1) with d = min(N1, N2) (unit_max), applied
    to the mode-1 term only. ``multiqubit``: 2/m. ``multipartite``: 2/m (paper)
    or d/((d-1) m) with d the smallest nontrivial dimension (unit_max).
    """
    dims = tuple(dims)
    m = len(dims)
    if path == "bipartite":
        d = min(dims)
        if config.normalization is Normalization.UNIT_MAX and d >= 2:
            return d / (d - 1)
        return 2.0
    if path == "multiqubit":
        return 2.0 / m
    if path == "multipartite":
        nontrivial = [n for n in dims if n >= 2]
        if config.normalization is Normalization.UNIT_MAX and nontrivial:
            d = min(nontrivial)
            return d / ((d - 1) * m)
        return 2.0 / m
    raise ArgumentError(f"unknown measure path {path!r}")


def _prepare(state: PureState, config: MeasureConfig) -> tuple[PureState, bool]:
    if abs(state.norm - 1.0) > config.norm_tolerance:
        return normalize(state), True
    return state, False


def mode_contribution(state: PureState, mode: int) -> float:
    """sum_{mu<nu} ||v_mu ^ v_nu||^2 over rows of the mode-``mode`` unfolding."""
    return row_pair_sum(unfold(state, mode).entries)


def _report(state, config, path, modes) -> MeasureReport:
    state, renorm = _prepare(state, config)
    contributions = tuple(mode_contribution(state, j) for j in modes)
    c = normalization_constant(path, state.dims, config)
    total = 0.0
    for s in contributions:
        total += s
    return MeasureReport(
        value=math.sqrt(c * total),
        mode_contributions=contributions,
        renormalized=renorm,
        config_used=config,
        path=path,
        constant=c,
    )


def bipartite_measure(state: PureState, config: MeasureConfig | None = None) -> MeasureReport:
    """Generalized concurrence of a two-party state from the rows of M = unfold(state, 1)."""
    config = config or MeasureConfig()
    if state.num_subsystems != 2:
        raise ArgumentError(f"bipartite measure needs exactly 2 subsystems, got {state.num_subsystems}")
    return _report(state, config, "bipartite", [1])


def two_qubit_concurrence(state: PureState, norm_tolerance: float = 1e-9) -> float:
    """2 |a11 a22 - a21 a12| of the (normalized) two-qubit state."""
    if state.dims != (2, 2):
        raise ArgumentError(f"two-qubit concurrence needs dims (2, 2), got {state.dims}")
    state, _ = _prepare(state, MeasureConfig(norm_tolerance=norm_tolerance))
    a11, a12, a21, a22 = state.amplitudes
    return 2 * abs(a11 * a22 - a21 * a12)


def multiqubit_measure(state: PureState, config: MeasureConfig | None = None) -> MeasureReport:
    config = config or MeasureConfig()
    if state.num_subsystems < 2:
        raise ArgumentError("multi-qubit measure needs m >= 2")
    if any(n != 2 for n in state.dims):
        raise ArgumentError(f"multi-qubit measure needs all dims = 2, got {state.dims}")
    return _report(state, config, "multiqubit", range(1, state.num_subsystems + 1))


def multipartite_measure(state: PureState, config: MeasureConfig | None = None) -> MeasureReport:
    config = config or MeasureConfig()
    if state.num_subsystems < 2:
        raise ArgumentError(f"multipartite measure needs m >= 2, got {state.num_subsystems}")
    return _report(state, config, "multipartite", range(1, state.num_subsystems + 1))


def measure_auto(state: PureState, config: MeasureConfig | None = None) -> MeasureReport:
    """Bipartite for m = 2, multi-qubit when all dims are 2, else multipartite."""
    if state.num_subsystems == 2:
        return bipartite_measure(state, config)
    if state.num_subsystems > 2 and all(n == 2 for n in state.dims):
        return multiqubit_measure(state, config)
    return multipartite_measure(state, config)
