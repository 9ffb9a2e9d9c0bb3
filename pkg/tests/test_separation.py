from dataclasses import astuple

from hypothesis import given

from fintopo.core import FiniteSpace
from fintopo.enumeration import topologies
from fintopo.operators import algebra
from fintopo.separation import (Thm24Conditions, separation_profile, thm24_conditions,
                                thm51_conditions)
from oracle import from_space, to_mask
from strategies import spaces

VARIANTS = (("open", "normal"), ("g_open", "g_normal"), ("scstar_open", "scstar_normal"))


def test_example_23(ex23):
    p = separation_profile(ex23)
    assert p.normal and p.g_normal and p.scstar_normal
    assert thm24_conditions(ex23) == Thm24Conditions(True, True, True)
    assert all(astuple(thm51_conditions(ex23)))


def test_indiscrete_and_discrete():
    for n in (1, 2, 3, 4):
        assert all(separation_profile(FiniteSpace.indiscrete(n)).flat().values())
        t = thm24_conditions(FiniteSpace.discrete(n))
        assert t.c1 and t.c2 and t.c3


def test_one_point(point):
    assert all(separation_profile(point).flat().values())


def test_flat_field_order(ex15):
    keys = list(separation_profile(ex15).flat())
    assert keys[:3] == ["normal", "g_normal", "scstar_normal"]
    assert keys[3:6] == ["thm24.c1", "thm24.c2", "thm24.c3"]
    assert keys[6:] == [f"thm51.{k}" for k in "abcdefg"]


def test_example_15_against_naive(ex15):
    _check_against_oracle(ex15)


def _check_against_oracle(s):
    oracle = from_space(s)
    alg = algebra(s)
    for lenient in (False, True):
        p = separation_profile(s, lenient)
        for cls, key in VARIANTS:
            flags = alg.table(cls)
            expect = oracle.normal_like(lambda a: flags[to_mask(a)], disjoint=not lenient)
            assert getattr(p, key) == expect


def test_all_three_point_spaces_against_naive():
    for s in topologies(3):
        _check_against_oracle(s)


@given(spaces())
def test_profile_invariants(s):
    for lenient in (False, True):
        p = separation_profile(s, lenient)
        assert p.thm24.c1 == p.scstar_normal
        assert p.thm51.a == p.scstar_normal
        assert not p.normal or p.g_normal


@given(spaces())
def test_lenient_reading_is_weaker(s):
    strict, loose = separation_profile(s), separation_profile(s, lenient=True)
    for key in ("normal", "g_normal", "scstar_normal"):
        assert not getattr(strict, key) or getattr(loose, key)
