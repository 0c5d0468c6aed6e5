from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from helpers import ACCEPTANCE_RESULTS, group_of

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def a1():
    return group_of("A1-adjoint")


@pytest.fixture
def a2():
    return group_of("A2")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, seconds, limit, detail = ACCEPTANCE_RESULTS[n]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {seconds:7.2f}s (limit {limit}s)  {detail}")
