import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20241014)


@pytest.fixture
def criterion():
    """Mutable box for an acceptance test to leave a one-line detail in."""
    return {"detail": ""}


def pytest_runtest_makereport(item, call):
    if call.when != "call" or "criterion" not in getattr(item, "fixturenames", ()):
        return
    if call.excinfo is None:
        _CRITERIA[item.name] = (True, item.funcargs["criterion"]["detail"])
    else:
        _CRITERIA[item.name] = (False, call.excinfo.exconly().splitlines()[0][:160])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
