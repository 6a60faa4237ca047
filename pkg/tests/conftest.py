import numpy as np
import pytest

from taudesign.group import X0, binary_icosahedral_group, coset_representatives, stabilizer


@pytest.fixture(scope="session")
def icosa():
    return binary_icosahedral_group(1)


@pytest.fixture(scope="session", params=[1, 2, 3, 4], ids=lambda e: f"eps{e}")
def icosa_any(request):
    return binary_icosahedral_group(request.param)


@pytest.fixture(scope="session")
def stab_x0(icosa):
    return stabilizer(icosa, X0)


@pytest.fixture(scope="session")
def reps_x0(icosa, stab_x0):
    return coset_representatives(icosa, stab_x0)


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid.startswith("tests/test_acceptance.py"):
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
