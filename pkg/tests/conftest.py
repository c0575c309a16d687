import numpy as np
import pytest

from tvcc.encoder import PeriodicEncoder, TimeInvariantEncoder


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def eq1():
    return TimeInvariantEncoder.parse("11 101")


@pytest.fixture
def eq1_periodic(eq1):
    return PeriodicEncoder.time_invariant(eq1)


@pytest.fixture
def alt_p2():
    """G_1 = [1+D, 1+D^2], G_2 = [1, 1+D]."""
    return PeriodicEncoder((TimeInvariantEncoder.parse("11 101"), TimeInvariantEncoder.parse("1 11")))


_CRITERIA = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _CRITERIA.append((marker.args[0], marker.args[1], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, ok in sorted(_CRITERIA):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
