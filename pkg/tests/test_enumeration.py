from itertools import permutations

import pytest

from fintopo.core import FiniteSpace, validate_topology
from fintopo.enumeration import (BudgetExceeded, compose_index_table, count_topologies,
                                 enumerate_maps, enumerate_topologies, naive_topologies,
                                 opens_of_preorder, preorders, specialization, table_index, tables, topologies)
from fintopo.maps import SpaceMap, compose


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 4), (3, 29)])
def test_small_counts_match_naive(n, expected):
    assert count_topologies(n) == expected
    assert sum(1 for _ in naive_topologies(n)) == expected


def test_five_points():
    assert count_topologies(5) == 6942


def test_up_to_homeo_counts():
    # one representative per relabeling class
    assert [count_topologies(n, up_to_homeo=True) for n in range(1, 5)] == [1, 3, 9, 33]


def test_representatives_are_pairwise_non_homeomorphic():
    reps = list(enumerate_topologies(3, up_to_homeo=True))
    seen = set()
    for s in reps:
        orbit = set()
        for p in permutations(range(3)):
            moved = frozenset(sum(1 << p[i] for i in range(3) if u >> i & 1) for u in s.opens)
            orbit.add(moved)
        assert not orbit & seen
        seen |= orbit
    assert len(seen) == 29


def test_every_space_is_valid_and_unique():
    for n in range(1, 5):
        spaces = list(enumerate_topologies(n))
        assert len(set(spaces)) == len(spaces)
        assert all(validate_topology(s.opens, n) is None for s in spaces)


def test_order_is_deterministic():
    assert [s.opens for s in enumerate_topologies(3)] == [s.opens for s in enumerate_topologies(3)]


def test_range_checks():
    with pytest.raises(ValueError):
        list(enumerate_topologies(0))
    with pytest.raises(ValueError):
        list(enumerate_topologies(7))
    with pytest.raises(ValueError):
        list(naive_topologies(5))


def test_specialization_inverts_preorders():
    for up in preorders(4):
        s = FiniteSpace.from_opens(4, opens_of_preorder(up), check=False)
        assert specialization(s) == up


def test_map_enumeration(ex15, point):
    assert sum(1 for _ in enumerate_maps(point, ex15)) == 4
    assert sum(1 for _ in enumerate_maps(ex15, ex15)) == 256
    tabs = [f.table for f in enumerate_maps(ex15, ex15)]
    assert tabs == sorted(tabs)
    with pytest.raises(BudgetExceeded):
        list(enumerate_maps(ex15, ex15, budget=100))


def test_constrained_maps_keep_order(ex15, ex16):
    cont = [f.table for f in enumerate_maps(ex15, ex16, ["continuous"])]
    assert cont == [t for t in tables(4, 4) if _is_continuous(SpaceMap(ex15, ex16, t))]


def _is_continuous(f):
    return all(f.domain.is_open(f.preimage(v)) for v in f.codomain.opens)


def test_compose_index_table():
    comp = compose_index_table(2, 3, 2)
    x, y, z = FiniteSpace.discrete(2), FiniteSpace.discrete(3), FiniteSpace.discrete(2)
    fs, gs = list(tables(2, 3)), list(tables(3, 2))
    for i, f in enumerate(fs):
        for j, g in enumerate(gs):
            h = compose(SpaceMap(x, y, f), SpaceMap(y, z, g))
            assert comp[i][j] == table_index(h.table, 2)


def test_topologies_cache_matches_stream():
    assert topologies(3) == tuple(enumerate_topologies(3))
