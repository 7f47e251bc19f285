import time

import pytest

from hodgejac.ambient import Grassmannian, ProjectiveSpace
from hodgejac.jacring import jacobian_graded_dims

_CACHE: dict = {}
ACCEPTANCE_LINES: list[str] = []


def timed_report(key, model_factory, seed, **kwargs):
    """Compute a Jacobian report once per session and remember its runtime."""
    if key not in _CACHE:
        model = model_factory()
        f = model.random_section(seed)
        t0 = time.perf_counter()
        rep = jacobian_graded_dims(model, f, **kwargs)
        _CACHE[key] = (model, f, rep, time.perf_counter() - t0)
    return _CACHE[key]


@pytest.fixture(scope="session")
def quintic():
    """``(model, f, report, seconds)`` for the quintic threefold, seed 1, k <= 4."""
    return timed_report("quintic", lambda: ProjectiveSpace(4, 5), 1, k_max=4)


@pytest.fixture(scope="session")
def g24_quartic():
    return timed_report("g24", lambda: Grassmannian(2, 4, 4), 1)


@pytest.fixture
def record_acceptance():
    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
