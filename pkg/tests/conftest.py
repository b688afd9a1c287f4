import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from groupement.core import FiniteGroupement, FiniteMonoid, cyclic_group, from_monoid
from groupement.enumeration import canonical_groupements

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

AND = FiniteMonoid([[0, 0], [0, 1]], 1)


@pytest.fixture
def xor():
    return from_monoid(cyclic_group(2), 0)


@pytest.fixture
def and_g():
    return from_monoid(AND, 0)


@st.composite
def tables(draw, max_n=3):
    """Arbitrary (s, t, comp) tables; most are not groupements."""
    n = draw(st.integers(1, max_n))
    idx = st.integers(0, n - 1)
    s = draw(st.lists(idx, min_size=n, max_size=n))
    t = draw(st.lists(idx, min_size=n, max_size=n))
    comp = draw(st.lists(st.lists(idx, min_size=n, max_size=n), min_size=n, max_size=n))
    return FiniteGroupement(s, t, comp)


SMALL_GROUPEMENTS = [g for n in (1, 2, 3) for g in canonical_groupements(n)]
CATEGORIES_3 = [g for g in SMALL_GROUPEMENTS if all(
    g.comp[x][g.s[x]] == x and g.comp[g.t[x]][x] == x for x in range(g.n))]


def groupements():
    return st.sampled_from(SMALL_GROUPEMENTS)


def pairs(n):
    return itertools.product(range(n), repeat=2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[k])
