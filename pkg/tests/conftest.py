import sys

import pytest

from twoparam.cartan import A2, A2_OPPOSITE, CartanData, validate
from twoparam.ring import parse_coeff


def P(text):
    return parse_coeff(text)


@pytest.fixture(scope="session")
def a2():
    return validate(A2)


@pytest.fixture(scope="session")
def a2op():
    return validate(A2_OPPOSITE)


@pytest.fixture(scope="session")
def a1():
    return validate([[1]])


# rank-2 matrices with -Omega_01, -Omega_10 in {0,1,2}, plus two rank-3 cases
SCAN_SET = [[[1, -a], [-b, 1]] for a in range(3) for b in range(3)] + [
    [[1, -1, 0], [0, 1, -1], [0, 0, 1]],
    [[1, -1, -1], [0, 1, -1], [0, 0, 1]],
]
RANK2_SCAN = [om for om in SCAN_SET if len(om) == 2] + [[[2, -1], [-1, 1]], [[2, -2], [0, 1]]]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
