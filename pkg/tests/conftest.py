import itertools

import pytest
from hypothesis import strategies as st

from idealspace.enumeration import enumerate_topologies
from idealspace.setspace import FiniteSpace, Ideal, PointSet, make_space

A, B, C = 0b001, 0b010, 0b100


def _x2():
    return make_space(2, [[], [1], [0, 1]], ["0", "1"])


def _y3():
    return make_space(3, [[], [0], [1], [0, 1], [0, 1, 2]], ["a", "b", "c"])


@pytest.fixture
def x2() -> FiniteSpace:
    return _x2()


@pytest.fixture
def y3() -> FiniteSpace:
    return _y3()


def small_universe(max_n=3):
    """Every (space, ideal generator, subset) triple up to max_n points."""
    for n in range(1, max_n + 1):
        for S in enumerate_topologies(n):
            for m, a in itertools.product(range(1 << n), repeat=2):
                yield S, m, a


def pset(S, mask):
    return PointSet(S.n, mask)


@st.composite
def spaces(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    tops = enumerate_topologies(n)
    return tops[draw(st.integers(0, len(tops) - 1))]


@st.composite
def space_ideal_set(draw, max_n=4):
    S = draw(spaces(max_n))
    m = draw(st.integers(0, (1 << S.n) - 1))
    a = draw(st.integers(0, (1 << S.n) - 1))
    return S, Ideal(S.n, m), PointSet(S.n, a)
