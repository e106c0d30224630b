"""Randomized invariant suites and the local-filtering experiment used by the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .measures import MeasureConfig, measure_auto, multipartite_measure
from .oracle import oracle_measure
from .states import (
    PureState,
    apply_local_operator,
    normalize,
    random_product_state,
    random_state,
    random_unitary,
)
from .wedge import lagrange_check

__all__ = [
    "ORACLE_PROFILES",
    "SuiteResult",
    "run_selftest",
    "random_filter",
    "monotone_experiment",
]

ORACLE_PROFILES = ((2, 2), (3, 3), (2, 4), (2, 2, 2), (2, 2, 2, 2), (2, 3, 2), (3, 3, 3))
PRODUCT_PROFILES = ((2, 2), (2, 2, 2), (3, 2, 4))
MAX_FILTER_CONDITION = 1e3


@dataclass
class SuiteResult:
    name: str
    tolerance: float
    passed: int = 0
    failed: int = 0
    worst: float = 0.0
    details: list[str] = field(default_factory=list)

    def record(self, err: float, what: str = "") -> None:
        self.worst = max(self.worst, err)
        if err <= self.tolerance:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.details) < 5:
                self.details.append(f"{what}: {err!r}")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "worst": self.worst,
            "tolerance": self.tolerance,
            "details": list(self.details),
        }


def _random_subsystem(rng: np.random.Generator, state: PureState) -> int:
    return int(rng.integers(1, state.num_subsystems + 1))


def run_selftest(seed: int, trials: int, config: MeasureConfig | None = None,
                 tolerance: float = 1e-10) -> list[SuiteResult]:
    """Run every invariant suite ``trials`` times from one seeded stream."""
    config = config or MeasureConfig()
    rng = np.random.default_rng(seed)

    oracle = SuiteResult("oracle_equivalence", tolerance)
    for i in range(trials):
        dims = ORACLE_PROFILES[i % len(ORACLE_PROFILES)]
        s = random_state(dims, rng)
        oracle.record(abs(measure_auto(s, config).value - oracle_measure(s, config)), f"dims={dims}")

    lu = SuiteResult("local_unitary_invariance", tolerance)
    for i in range(trials):
        dims = ORACLE_PROFILES[i % len(ORACLE_PROFILES)]
        s = random_state(dims, rng)
        j = _random_subsystem(rng, s)
        u = random_unitary(s.dims[j - 1], rng)
        after = apply_local_operator(s, j, u)
        lu.record(abs(measure_auto(after, config).value - measure_auto(s, config).value),
                  f"dims={dims} subsystem={j}")

    product = SuiteResult("product_vanishing", tolerance)
    for i in range(trials):
        dims = PRODUCT_PROFILES[i % len(PRODUCT_PROFILES)]
        s = random_product_state(dims, rng)
        product.record(max(measure_auto(s, config).value, multipartite_measure(s, config).value),
                       f"dims={dims}")

    lagrange = SuiteResult("lagrange_identity", 1e-12)
    for _ in range(trials):
        d = int(rng.integers(2, 17))
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        w = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        lhs, rhs = lagrange_check(v, w)
        scale = 2 * np.vdot(v, v).real * np.vdot(w, w).real
        lagrange.record(abs(lhs - rhs) / scale, f"length={d}")

    return [oracle, lu, product, lagrange]


def random_filter(n: int, rng: np.random.Generator, max_condition: float = MAX_FILTER_CONDITION) -> np.ndarray:
    """Complex Gaussian n x n matrix, redrawn until its condition number is <= max_condition."""
    while True:
        a = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
        if np.linalg.cond(a) <= max_condition:
            return a


def monotone_experiment(seed: int, trials: int, dims, kind: str = "random",
                        config: MeasureConfig | None = None, tolerance: float = 1e-10) -> dict:
    """Ratios E(after)/E(before) under single-subsystem filters.

    ``kind`` is ``"random"`` (invertible Gaussian filter), ``"unitary"`` or
    ``"identity"``. Reports statistics only; nothing is asserted.
    """
    config = config or MeasureConfig()
    rng = np.random.default_rng(seed)
    ratios = np.empty(trials)
    for t in range(trials):
        s = random_state(dims, rng)
        j = _random_subsystem(rng, s)
        n = s.dims[j - 1]
        if kind == "random":
            op = random_filter(n, rng)
        elif kind == "unitary":
            op = random_unitary(n, rng)
        elif kind == "identity":
            op = np.eye(n)
        else:
            raise ValueError(f"unknown filter kind {kind!r}")
        after = apply_local_operator(s, j, op)
        if abs(after.norm - 1.0) > config.norm_tolerance:
            after = normalize(after)
        ratios[t] = measure_auto(after, config).value / measure_auto(s, config).value
    q = np.quantile(ratios, [0.05, 0.25, 0.5, 0.75, 0.95])
    return {
        "dims": list(dims),
        "filter": kind,
        "seed": seed,
        "trials": trials,
        "ratio_min": float(ratios.min()),
        "ratio_max": float(ratios.max()),
        "ratio_mean": float(ratios.mean()),
        "ratio_quantiles": {k: float(x) for k, x in zip(("p05", "p25", "p50", "p75", "p95"), q)},
        "fraction_decreased": float(np.mean(ratios < 1.0 - tolerance)),
        "max_abs_deviation_from_1": float(np.max(np.abs(ratios - 1.0))),
    }
