import pytest
from hypothesis import HealthCheck, settings, strategies as st

from fiedlerburau.braidword import BraidWord, random_braid
from fiedlerburau.harness import valid_lengths
from fiedlerburau.polyring import Jet1, LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def braids(draw, min_n=2, max_n=6, max_len=12, n=None):
    n = draw(st.integers(min_n, max_n)) if n is None else n
    alphabet = [j for i in range(1, n) for j in (i, -i)]
    word = draw(st.lists(st.sampled_from(alphabet), max_size=max_len)) if alphabet else []
    return BraidWord.from_ints(word, n)


@st.composite
def braid_pairs(draw, min_n=2, max_n=6, max_len=10):
    n = draw(st.integers(min_n, max_n))
    return draw(braids(n=n, max_len=max_len)), draw(braids(n=n, max_len=max_len))


@st.composite
def knot_braids(draw, min_n=2, max_n=7, max_len=20):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.sampled_from(valid_lengths(n, 0, max(max_len, n - 1))))
    return random_braid(n, k, draw(st.integers(0, 2**32)), require_knot=True)


laurent_polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-50, 50), max_size=6
).map(LaurentPoly)

jets = st.builds(Jet1, st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))


@pytest.fixture
def trefoil():
    return BraidWord.from_ints([1, 1, 1])


@pytest.fixture
def s1s2():
    return BraidWord.from_ints([1, 2], 3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
