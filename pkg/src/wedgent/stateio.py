"""JSON state documents: ``{"dims": [...], "amplitudes": [[re, im], ...]}``."""
from __future__ import annotations

import json
import math
from pathlib import Path

from .errors import StateFormatError
from .states import PureState, make_state

__all__ = ["loads_state", "load_state", "dumps_state", "dump_state"]


def _reject_constant(name):
    raise StateFormatError(f"non-finite number {name} in state document")


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise StateFormatError(f"{where}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise StateFormatError(f"{where}: non-finite number {x}")
    return x


def loads_state(text: str) -> PureState:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "dims" not in doc or "amplitudes" not in doc:
        raise StateFormatError('state document must be an object with "dims" and "amplitudes"')
    dims, raw = doc["dims"], doc["amplitudes"]
    if not isinstance(dims, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise StateFormatError(f"dims must be a list of integers, got {dims!r}")
    if not isinstance(raw, list):
        raise StateFormatError("amplitudes must be a list of [re, im] pairs")
    amps = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise StateFormatError(f"amplitude {i}: expected [re, im], got {pair!r}")
        amps.append(complex(_number(pair[0], f"amplitude {i}"), _number(pair[1], f"amplitude {i}")))
    # DimensionError / ArgumentError from make_state propagate unchanged
    return make_state(dims, amps)


def load_state(path: str | Path) -> PureState:
    return loads_state(Path(path).read_text(encoding="utf-8"))


def dumps_state(state: PureState) -> str:
    doc = {
        "dims": list(state.dims),
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    return json.dumps(doc)


def dump_state(state: PureState, path: str | Path) -> None:
    Path(path).write_text(dumps_state(state) + "\n", encoding="utf-8")
