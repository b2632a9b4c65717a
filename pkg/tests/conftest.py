import random

import pytest
from hypothesis import strategies as st

from hosoyapoly.polyarith import IntPolynomial

SEED = 20170601


def polys(max_degree=6, bound=20):
    return st.lists(st.integers(-bound, bound), max_size=max_degree + 1).map(IntPolynomial)


def nonzero_polys(max_degree=6, bound=20):
    return polys(max_degree, bound).filter(lambda p: not p.is_zero())


@pytest.fixture
def rng():
    return random.Random(SEED)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
