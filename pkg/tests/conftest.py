import math

import pytest

from gamma_systole import optimal_surface


def bisect_root(f, lo, hi, tol=1e-14):
    """Plain bisection, used as an oracle independent of the library."""
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def inv_cosh(y):
    return bisect_root(lambda x: math.cosh(x) - y, 0.0, 50.0)


@pytest.fixture(scope="session")
def bolza():
    return optimal_surface(3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
