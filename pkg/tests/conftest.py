import math

import numpy as np
import pytest

from jcentropy.dynamics import Scenario, ScenarioSpec

FIELD_MIX = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=4, beta=-4, C=0.5, dim=64)
ATOM_MIX = ScenarioSpec(Scenario.ATOM_MIXTURE, alpha=4, C=0.5, dim=64)


def binary_entropy(p):
    return -sum(x * math.log(x) for x in (p, 1 - p) if x > 0)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def random_density(rng, n, rank=None):
    rank = n if rank is None else rank
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


# ---- acceptance summary -------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[mark.args[0]] = (mark.args[1], "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
