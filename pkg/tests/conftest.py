import sys

import pytest

from selfsim.contraction import nucleus
from selfsim.gallery import builtin


@pytest.fixture(scope="session")
def odometer():
    return builtin("odometer")


@pytest.fixture(scope="session")
def hanoi():
    return builtin("hanoi")


@pytest.fixture(scope="session")
def longrange():
    return builtin("longrange")


@pytest.fixture(scope="session")
def hgraph():
    return builtin("hgraph")


@pytest.fixture(scope="session")
def odo_nuc(odometer):
    return nucleus(odometer)


@pytest.fixture(scope="session")
def hanoi_nuc(hanoi):
    return nucleus(hanoi)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
