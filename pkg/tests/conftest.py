import pytest
from hypothesis import settings, strategies as st

from a2reps.field import Cyclo
from a2reps.hopf import Params

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

KS = (4, 8, 12, 20, 24)


@st.composite
def cyclos(draw, K=None):
    K = K or draw(st.sampled_from(KS))
    deg = len(Cyclo.one(K).coeffs())
    num = draw(st.lists(st.integers(-9, 9), min_size=deg, max_size=deg))
    return Cyclo(K, num, draw(st.integers(1, 6)))


@st.composite
def cyclo_pairs(draw, n=2):
    K = draw(st.sampled_from(KS))
    return tuple(draw(cyclos(K)) for _ in range(n))


small_params = st.builds(
    Params.make,
    st.sampled_from((2, 3)),
    st.sampled_from((2, 3)),
    st.tuples(*(st.integers(0, 2) for _ in range(3))),
)


@pytest.fixture
def p22():
    return Params.make(2, 2, (0, 0, 0))


@pytest.fixture
def p32():
    return Params.make(3, 2, (0, 0, 0))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
