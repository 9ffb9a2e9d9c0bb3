import json

import pytest
from hypothesis import given

from fintopo.core import (GroundSet, SpaceFormatError, TopologyError, closure,
                          complement, interior, parse_space, serialize, space_from_document,
                          validate_topology)
from strategies import space_and_subset, space_and_two_subsets, spaces

EX15_TEXT = """points: q r s t
open:
open: r t
open: q r t
open: r s t
open: *
"""


def m(space, labels):
    return space.mask(list(labels))


def test_parse_example_space():
    s = parse_space(EX15_TEXT)
    assert s.ground.labels == ("q", "r", "s", "t")
    assert len(s.opens) == 5
    assert [s.ground.names(u) for u in s.opens][1:4] == [["r", "t"], ["q", "r", "t"], ["r", "s", "t"]]


def test_parse_one_point():
    s = parse_space("points: a\nopen:\nopen: a\n")
    assert s.n == 1 and s.opens == (0, 1)


def test_opens_canonicalized_to_ascending_order():
    s = parse_space("points: a b\nopen: *\nopen: b\nopen:\n")
    assert list(s.opens) == sorted(s.opens)


def test_missing_union_reported():
    text = "points: q r s t\nopen:\nopen: q\nopen: s t\nopen: *\n"
    with pytest.raises(TopologyError) as info:
        parse_space(text)
    v = info.value.violation
    assert v.kind == "union"
    assert v.missing == 0b1101  # q, s, t are points 0, 2, 3
    assert "{q,s,t}" in str(info.value)


@pytest.mark.parametrize("text, line, column", [
    ("points: a b\nopen: a c\n", 2, 9),
    ("points: a b\nfoo\n", 2, 1),
    ("open: a\n", 1, 1),
    ("points: a b\nopen: a\nopen: a\nopen:\nopen: *\n", 3, 1),
    ('{"points": ["a"], "opens": [[]\n', 2, 1),
])
def test_format_errors_carry_position(text, line, column):
    with pytest.raises(SpaceFormatError) as info:
        parse_space(text)
    assert info.value.line == line
    assert info.value.column == column


def test_duplicate_open_rejected_in_structured_form():
    with pytest.raises(SpaceFormatError):
        space_from_document({"points": ["a"], "opens": [[], ["a"], ["a"]]})


def test_validate_examples():
    q, r, s = 1, 2, 4
    ex16 = [0, q, r, q | r, q | s, q | r | s, 15]
    assert validate_topology(ex16, 4) is None
    assert validate_topology(range(8), 3) is None
    v = validate_topology([0, q, r, 7], 3)
    assert v.kind == "union" and v.pair == (q, r) and v.missing == q | r


def test_validate_requires_empty_and_whole():
    assert validate_topology([1, 3], 2).kind == "empty"
    assert validate_topology([0, 1], 2).kind == "whole"


def test_interior_closure_examples(ex15, ex16):
    assert interior(ex15, m(ex15, "qrt")) == m(ex15, "qrt")
    assert interior(ex16, m(ex16, "qst")) == m(ex16, "qs")
    assert closure(ex15, m(ex15, "r")) == ex15.full
    assert closure(ex16, m(ex16, "s")) == m(ex16, "st")
    assert closure(ex15, 0) == 0
    assert interior(ex15, ex15.full) == ex15.full


def test_ground_set_rejects_duplicates():
    with pytest.raises(ValueError):
        GroundSet(("a", "a"))


@given(spaces())
def test_round_trip_both_formats(s):
    assert parse_space(serialize(s)) == s
    assert parse_space(serialize(s, structured=True)) == s
    assert json.loads(serialize(s, structured=True))["points"] == list(s.ground.labels)


@given(space_and_subset())
def test_duality_and_idempotence(case):
    s, a = case
    assert closure(s, a) == complement(interior(s, complement(a, s.n)), s.n)
    i, c = interior(s, a), closure(s, a)
    assert i & ~a == 0 and a & ~c == 0
    assert interior(s, i) == i and closure(s, c) == c
    assert s.is_open(i) and s.is_closed(c)
    assert s.is_open(a) == (i == a)
    assert s.is_closed(a) == (c == a)


@given(space_and_two_subsets())
def test_monotone(case):
    s, a, b = case
    lo, hi = a & b, a | b
    assert closure(s, lo) & ~closure(s, hi) == 0
    assert interior(s, lo) & ~interior(s, hi) == 0
