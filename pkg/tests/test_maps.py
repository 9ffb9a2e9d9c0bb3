import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fintopo.core import FiniteSpace, SpaceFormatError
from fintopo.enumeration import enumerate_maps, topologies
from fintopo.maps import (MAP_FIELDS, MapError, SpaceMap, characterization_audit, compose,
                          load_map, map_profile, map_to_document, parse_map)
from oracle import NaiveMap, from_space
from strategies import spaces

PRESERVATION = [f for f in MAP_FIELDS if f not in (
    "surjective", "injective", "bijective", "quasi_scstar_closed", "completely_continuous")]


@st.composite
def maps(draw, max_n=3):
    x, y = draw(spaces(max_n)), draw(spaces(max_n))
    table = draw(st.lists(st.integers(0, y.n - 1), min_size=x.n, max_size=x.n))
    return SpaceMap(x, y, table)


def test_golden_profile(golden_dir):
    f = load_map(golden_dir / "ex15_to_ex16.map")
    expected = json.loads((golden_dir / "ex15_to_ex16_profile.json").read_text())["profile"]
    assert map_profile(f).as_dict() == expected


def test_identity_preserves_everything(ex15):
    p = map_profile(SpaceMap.identity(ex15))
    for name in PRESERVATION:
        assert getattr(p, name), name
    for entry in characterization_audit(SpaceMap.identity(ex15)).values():
        assert entry.left_value and entry.right_value


def test_constant_to_point(ex15, point):
    f = SpaceMap.constant(ex15, point)
    p = map_profile(f)
    assert p.continuous and p.surjective
    t33 = characterization_audit(f)["T3.3"]
    assert t33.left_value and t33.right_value


def test_compose_examples(ex15, ex16, point, golden_dir):
    f = load_map(golden_dir / "ex15_to_ex16.map")
    assert compose(SpaceMap.identity(ex15), f) == f
    const = SpaceMap.constant(ex16, point)
    assert compose(f, const) == SpaceMap.constant(ex15, point)
    with pytest.raises(MapError):
        compose(f, f)


def test_table_validation(ex15, point):
    with pytest.raises(MapError):
        SpaceMap(ex15, point, [0, 0, 0])
    with pytest.raises(MapError):
        SpaceMap(ex15, point, [0, 0, 0, 1])


def test_structured_map_format(golden_dir, ex15, ex16):
    f = load_map(golden_dir / "ex15_to_ex16.map")
    doc = map_to_document(f)
    assert parse_map(json.dumps(doc)) == f
    by_path = {"domain": "ex15.top", "codomain": "ex16.top",
               "table": {"q": "r", "r": "r", "s": "s", "t": "q"}}
    g = parse_map(json.dumps(by_path), str(golden_dir))
    assert g.table == (1, 1, 2, 0)


@pytest.mark.parametrize("body, line", [
    ("map: q -> z\n", 3),
    ("map: q r\n", 3),
    ("map: q -> q\nmap: q -> r\n", 4),
])
def test_map_format_errors(golden_dir, body, line):
    text = "domain: ex15.top\ncodomain: ex16.top\n" + body
    with pytest.raises(SpaceFormatError) as info:
        parse_map(text, str(golden_dir))
    assert info.value.line == line


def test_partial_map_rejected(golden_dir):
    with pytest.raises(SpaceFormatError, match="not total"):
        parse_map("domain: ex15.top\ncodomain: ex16.top\nmap: q -> q\n", str(golden_dir))


def test_surjection_count_between_three_point_spaces():
    x = y = FiniteSpace.discrete(3)
    assert sum(1 for _ in enumerate_maps(x, y, ["surjective"])) == 6


@given(maps())
@settings(max_examples=80)
def test_profile_matches_naive_reference(f):
    naive = NaiveMap(from_space(f.domain), from_space(f.codomain), f.table)
    assert map_profile(f).as_dict() == naive.profile()


@given(maps())
def test_image_preimage_semantics(f):
    for a in range(f.domain.full + 1):
        expect = 0
        for x in range(f.domain.n):
            if a >> x & 1:
                expect |= 1 << f.table[x]
        assert f.image(a) == expect
    for b in range(f.codomain.full + 1):
        assert f.preimage(b) == sum(1 << x for x in range(f.domain.n) if b >> f.table[x] & 1)


@given(maps())
def test_forced_map_implications(f):
    p = map_profile(f)
    assert p.bijective == (p.surjective and p.injective)
    assert not p.scstar_irresolute or p.scstar_gscstar_continuous
    assert not p.scstar_closed_map or p.almost_gscstar_closed
    assert characterization_audit(f, p)["T4.10"].holds


def test_audit_entries_on_three_point_sample():
    xs = topologies(3)[::5]
    for x in xs:
        for y in xs:
            f = SpaceMap(x, y, (0, 1, 1))
            audit = characterization_audit(f)
            assert set(audit) == {"T3.3", "L3.4", "T3.5", "L4.7", "T4.10", "L5.6", "L5.7"}
            assert audit["L5.7"].directional
