"""Hypothesis strategies shared across the property tests."""

from hypothesis import strategies as st

from fintopo.enumeration import topologies


@st.composite
def spaces(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    pool = topologies(n)
    return pool[draw(st.integers(0, len(pool) - 1))]


@st.composite
def space_and_subset(draw, max_n=4):
    s = draw(spaces(max_n))
    return s, draw(st.integers(0, s.full))


@st.composite
def space_and_two_subsets(draw, max_n=4):
    s = draw(spaces(max_n))
    return s, draw(st.integers(0, s.full)), draw(st.integers(0, s.full))
