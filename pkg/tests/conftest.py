import numpy as np
import pytest

from grssub.extension import ExtensionCtx
from grssub.matql import parse_matrix
from grssub.smallfield import gf

# Expanded generator of the cyclic [7, 5] GRS code over F_8 (x^3 + x + 1), delta = 0.
EXPANDED_F8_N7_K5 = parse_matrix("""
1 0 0 1 0 0 1 0 0 1 0 0 1 0 0 1 0 0 1 0 0
0 1 0 0 1 0 0 1 0 0 1 0 0 1 0 0 1 0 0 1 0
0 0 1 0 0 1 0 0 1 0 0 1 0 0 1 0 0 1 0 0 1
1 0 0 0 1 0 0 0 1 1 1 0 0 1 1 1 1 1 1 0 1
0 1 0 0 0 1 1 1 0 0 1 1 1 1 1 1 0 1 1 0 0
0 0 1 1 1 0 0 1 1 1 1 1 1 0 1 1 0 0 0 1 0
1 0 0 0 0 1 0 1 1 1 0 1 0 1 0 1 1 0 1 1 1
0 1 0 1 1 0 1 1 1 1 0 0 0 0 1 0 1 1 1 0 1
0 0 1 0 1 1 1 0 1 0 1 0 1 1 0 1 1 1 1 0 0
1 0 0 1 1 0 1 0 1 0 0 1 1 1 1 0 1 0 0 1 1
0 1 0 0 1 1 1 0 0 1 1 0 1 0 1 0 0 1 1 1 1
0 0 1 1 1 1 0 1 0 0 1 1 1 0 0 1 1 0 1 0 1
1 0 0 0 1 1 0 1 0 1 1 1 0 0 1 1 0 1 1 1 0
0 1 0 1 1 1 0 0 1 1 0 1 1 1 0 1 0 0 0 1 1
0 0 1 1 0 1 1 1 0 1 0 0 0 1 1 0 1 0 1 1 1
""")

# Constraint bases for the same parent with delta = 0, 1, 4.
GAMMA_DELTA0 = parse_matrix("""
1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 1 0 0 0 0 0 1 0 0
0 0 0 0 1 0 0 0 1 0 0 0 0 1 1
0 0 0 0 0 1 0 1 1 0 0 0 0 1 0
""")
GAMMA_DELTA1 = parse_matrix("""
1 0 0 1 0 0 0 0 0 1 0 0 0 0 0
0 1 0 0 0 1 0 0 0 0 1 1 0 0 0
0 0 1 0 1 1 0 0 0 0 1 0 0 0 0
""")
GAMMA_DELTA4 = parse_matrix("""
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
""")

# Constraint basis of the trivial k = n = 7 parent over F_8, delta = 0.
GAMMA_K7 = parse_matrix("""
1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 1 0 0 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 1 0 0 0 1 0 0 0 0 1 1 0 0 0 0 0 0
0 0 0 0 0 1 0 1 1 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 1 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 1 1 0 0 1
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 1 1
""")


@pytest.fixture(scope="session")
def F2():
    return gf(2)


@pytest.fixture(scope="session")
def F9_base():
    return gf(3, 2, [1, 0, 1])


@pytest.fixture(scope="session")
def F8(F2):
    return ExtensionCtx(F2, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def F16(F2):
    return ExtensionCtx(F2, [1, 1, 0, 0, 1])


@pytest.fixture(scope="session")
def F64(F2):
    return ExtensionCtx(F2, [1, 1, 0, 0, 0, 0, 1])


@pytest.fixture(scope="session")
def F9():
    """F_9 as a degree-2 extension of F_3 (x^2 + 1)."""
    return ExtensionCtx(gf(3), [1, 0, 1])


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one summary line per acceptance criterion and print it."""

    def report(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
