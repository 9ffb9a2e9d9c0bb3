"""Functions between finite spaces and the function classes built on set classes."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from functools import cached_property
from typing import Sequence

from .core import FiniteSpace, SpaceFormatError, load_space, space_from_document, space_to_document
from .operators import SetAlgebra, algebra


class MapError(ValueError):
    pass


class SpaceMap:
    """A total function ``domain -> codomain`` stored as a table of point indices."""

    __slots__ = ("domain", "codomain", "table", "__dict__")

    def __init__(self, domain: FiniteSpace, codomain: FiniteSpace, table: Sequence[int]):
        table = tuple(int(t) for t in table)
        if len(table) != domain.n:
            raise MapError(f"table has {len(table)} entries, domain has {domain.n} points")
        if any(not 0 <= t < codomain.n for t in table):
            raise MapError("table entry outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = table

    @classmethod
    def identity(cls, space: FiniteSpace) -> "SpaceMap":
        return cls(space, space, range(space.n))

    @classmethod
    def constant(cls, domain: FiniteSpace, codomain: FiniteSpace, y: int = 0) -> "SpaceMap":
        return cls(domain, codomain, [y] * domain.n)

    @cached_property
    def images(self) -> list[int]:
        """``images[a]`` is f(a) for every mask ``a`` of the domain."""
        out = [0] * (1 << self.domain.n)
        for i, t in enumerate(self.table):
            bit, val = 1 << i, 1 << t
            for a in range(bit, bit << 1):
                out[a] = out[a - bit] | val
        return out

    @cached_property
    def preimages(self) -> list[int]:
        fibres = [0] * self.codomain.n
        for i, t in enumerate(self.table):
            fibres[t] |= 1 << i
        out = [0] * (1 << self.codomain.n)
        for j, fib in enumerate(fibres):
            bit = 1 << j
            for b in range(bit, bit << 1):
                out[b] = out[b - bit] | fib
        return out

    def image(self, a: int) -> int:
        return self.images[a]

    def preimage(self, b: int) -> int:
        return self.preimages[b]

    def __eq__(self, other):
        if not isinstance(other, SpaceMap):
            return NotImplemented
        return (self.domain, self.codomain, self.table) == (other.domain, other.codomain, other.table)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.table))

    def __repr__(self):
        dl, cl = self.domain.ground.labels, self.codomain.ground.labels
        pairs = ", ".join(f"{dl[i]}->{cl[t]}" for i, t in enumerate(self.table))
        return f"SpaceMap({pairs})"


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """``g ∘ f`` (apply ``f`` first)."""
    if f.codomain != g.domain:
        raise MapError("cannot compose: codomain of f is not the domain of g")
    return SpaceMap(f.domain, g.codomain, [g.table[t] for t in f.table])


@dataclass(frozen=True)
class MapClassification:
    continuous: bool
    open_map: bool
    closed_map: bool
    surjective: bool
    injective: bool
    bijective: bool
    r_map: bool
    completely_continuous: bool
    rc_continuous: bool
    strongly_scstar_open: bool
    strongly_scstar_closed: bool
    almost_scstar_irresolute: bool
    scstar_closed_map: bool
    scstar_g_closed_map: bool
    gscstar_closed_map: bool
    quasi_scstar_closed: bool
    scstar_scstar_g_closed: bool
    scstar_gscstar_closed: bool
    almost_gscstar_closed: bool
    scstar_gscstar_continuous: bool
    scstar_irresolute: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


MAP_FIELDS = tuple(f.name for f in fields(MapClassification))


def _images_in(f: SpaceMap, src: SetAlgebra, src_cls: str, dst: SetAlgebra, dst_cls: str) -> bool:
    img = f.images
    ok = dst.table(dst_cls)
    return all(ok[img[a]] for a in src.members(src_cls))


def _preimages_in(f: SpaceMap, src: SetAlgebra, src_cls: str, dst: SetAlgebra, dst_cls: str) -> bool:
    pre = f.preimages
    ok = src.table(src_cls)
    return all(ok[pre[b]] for b in dst.members(dst_cls))


def almost_scstar_irresolute(f: SpaceMap) -> bool:
    """Neighbourhood form: for each ``x`` and each SC*-nbd ``V`` of ``f(x)``,
    ``SC*-cl(f⁻¹(V))`` is an SC*-nbd of ``x``."""
    ax, ay = algebra(f.domain), algebra(f.codomain)
    pre, sccl, scint_x, scint_y = f.preimages, ax.sccl, ax.scint, ay.scint
    for v in range(1 << f.codomain.n):
        nbd_of = scint_y[v]
        if not nbd_of:
            continue
        inner = scint_x[sccl[pre[v]]]
        for x, fx in enumerate(f.table):
            if nbd_of >> fx & 1 and not inner >> x & 1:
                return False
    return True


def map_profile(f: SpaceMap) -> MapClassification:
    ax, ay = algebra(f.domain), algebra(f.codomain)
    surjective = f.images[f.domain.full] == f.codomain.full
    injective = len(set(f.table)) == len(f.table)
    return MapClassification(
        continuous=_preimages_in(f, ax, "open", ay, "open"),
        open_map=_images_in(f, ax, "open", ay, "open"),
        closed_map=_images_in(f, ax, "closed", ay, "closed"),
        surjective=surjective,
        injective=injective,
        bijective=surjective and injective,
        r_map=_preimages_in(f, ax, "regular_open", ay, "regular_open"),
        completely_continuous=_preimages_in(f, ax, "regular_open", ay, "open"),
        rc_continuous=_preimages_in(f, ax, "regular_closed", ay, "regular_closed"),
        strongly_scstar_open=_images_in(f, ax, "scstar_open", ay, "scstar_open"),
        strongly_scstar_closed=_images_in(f, ax, "scstar_closed", ay, "scstar_closed"),
        almost_scstar_irresolute=almost_scstar_irresolute(f),
        scstar_closed_map=_images_in(f, ax, "closed", ay, "scstar_closed"),
        scstar_g_closed_map=_images_in(f, ax, "closed", ay, "scstar_g_closed"),
        gscstar_closed_map=_images_in(f, ax, "closed", ay, "gscstar_closed"),
        quasi_scstar_closed=_images_in(f, ax, "scstar_closed", ay, "closed"),
        scstar_scstar_g_closed=_images_in(f, ax, "scstar_closed", ay, "scstar_g_closed"),
        scstar_gscstar_closed=_images_in(f, ax, "scstar_closed", ay, "gscstar_closed"),
        almost_gscstar_closed=_images_in(f, ax, "regular_closed", ay, "gscstar_closed"),
        scstar_gscstar_continuous=_preimages_in(f, ax, "gscstar_closed", ay, "scstar_closed"),
        scstar_irresolute=_preimages_in(f, ax, "scstar_open", ay, "scstar_open"),
    )


# -- characterization right-hand sides -----------------------------------------

def _factors_through(f: SpaceMap, bs, us, vs) -> bool:
    """For every ``b`` in ``bs`` and ``u`` in ``us`` with ``f⁻¹(b) ⊆ u`` there is
    some ``v`` in ``vs`` with ``b ⊆ v`` and ``f⁻¹(v) ⊆ u``."""
    pre = f.preimages
    for u in us:
        good = [v for v in vs if pre[v] & ~u == 0]
        for b in bs:
            if pre[b] & ~u == 0 and not any(b & ~v == 0 for v in good):
                return False
    return True


def thm33_rhs(f: SpaceMap) -> bool:
    ax, ay = algebra(f.domain), algebra(f.codomain)
    return _factors_through(f, range(1 << f.codomain.n), ax.members("scstar_open"),
                            ay.members("scstar_open"))


def lemma34_rhs(f: SpaceMap) -> bool:
    ax, ay = algebra(f.domain), algebra(f.codomain)
    pre = f.preimages
    return all(pre[v] & ~ax.scint[ax.sccl[pre[v]]] == 0 for v in ay.members("scstar_open"))


def thm35_rhs(f: SpaceMap) -> bool:
    """``f(SC*-cl(U)) ⊆ SC*-cl(f(U))`` for every SC*-open ``U`` of the domain."""
    ax, ay = algebra(f.domain), algebra(f.codomain)
    img = f.images
    return all(img[ax.sccl[u]] & ~ay.sccl[img[u]] == 0 for u in ax.members("scstar_open"))


def lemma47_rhs(f: SpaceMap) -> bool:
    ax, ay = algebra(f.domain), algebra(f.codomain)
    return _factors_through(f, range(1 << f.codomain.n), ax.members("scstar_open"),
                            ay.members("gscstar_open"))


def lemma56_rhs(f: SpaceMap) -> bool:
    ax, ay = algebra(f.domain), algebra(f.codomain)
    return _factors_through(f, range(1 << f.codomain.n), ax.members("regular_open"),
                            ay.members("gscstar_open"))


def lemma57_rhs(f: SpaceMap) -> bool:
    ax, ay = algebra(f.domain), algebra(f.codomain)
    return _factors_through(f, f.codomain.closeds, ax.members("regular_open"),
                            ay.members("scstar_open"))


def preimage_scstar_open_is_gscstar_open(f: SpaceMap) -> bool:
    return _preimages_in(f, algebra(f.domain), "gscstar_open", algebra(f.codomain), "scstar_open")


def image_gscstar_closed(f: SpaceMap) -> bool:
    return _images_in(f, algebra(f.domain), "gscstar_closed", algebra(f.codomain), "gscstar_closed")


def preimage_gscstar_closed(f: SpaceMap) -> bool:
    return _preimages_in(f, algebra(f.domain), "gscstar_closed", algebra(f.codomain), "gscstar_closed")


@dataclass(frozen=True)
class AuditEntry:
    left: str
    right: str
    left_value: bool
    right_value: bool
    directional: bool = False

    @property
    def holds(self) -> bool:
        if self.directional:
            return (not self.left_value) or self.right_value
        return self.left_value == self.right_value


def characterization_audit(f: SpaceMap, profile: MapClassification | None = None) -> dict[str, AuditEntry]:
    """Both sides of each map characterization, computed independently."""
    p = profile or map_profile(f)
    return {
        "T3.3": AuditEntry("strongly_scstar_closed", "thm33_rhs",
                           p.strongly_scstar_closed, thm33_rhs(f)),
        "L3.4": AuditEntry("almost_scstar_irresolute", "lemma34_rhs",
                           p.almost_scstar_irresolute, lemma34_rhs(f)),
        "T3.5": AuditEntry("almost_scstar_irresolute", "thm35_rhs",
                           p.almost_scstar_irresolute, thm35_rhs(f)),
        "L4.7": AuditEntry("scstar_gscstar_closed", "lemma47_rhs",
                           p.scstar_gscstar_closed, lemma47_rhs(f)),
        "T4.10": AuditEntry("scstar_gscstar_continuous", "preimage_scstar_open_is_gscstar_open",
                            p.scstar_gscstar_continuous, preimage_scstar_open_is_gscstar_open(f)),
        "L5.6": AuditEntry("almost_gscstar_closed", "lemma56_rhs",
                           p.almost_gscstar_closed, lemma56_rhs(f)),
        "L5.7": AuditEntry("almost_gscstar_closed", "lemma57_rhs",
                           p.almost_gscstar_closed, lemma57_rhs(f), directional=True),
    }


# Extra per-map predicates used by the claim catalog, beyond the profile.
DERIVED_PREDICATES = {
    "thm33_rhs": thm33_rhs,
    "lemma34_rhs": lemma34_rhs,
    "thm35_rhs": thm35_rhs,
    "lemma47_rhs": lemma47_rhs,
    "lemma56_rhs": lemma56_rhs,
    "lemma57_rhs": lemma57_rhs,
    "preimage_scstar_open_is_gscstar_open": preimage_scstar_open_is_gscstar_open,
    "image_gscstar_closed": image_gscstar_closed,
    "preimage_gscstar_closed": preimage_gscstar_closed,
}

MAP_PREDICATES = MAP_FIELDS + tuple(DERIVED_PREDICATES)


def map_record(f: SpaceMap) -> dict[str, bool]:
    rec = map_profile(f).as_dict()
    for name, fn in DERIVED_PREDICATES.items():
        rec[name] = fn(f)
    return rec


# -- file formats ---------------------------------------------------------------

def _resolve_space(ref, base_dir: str) -> FiniteSpace:
    if isinstance(ref, dict):
        return space_from_document(ref)
    return load_space(os.path.join(base_dir, ref))


def _table_from_pairs(pairs, dom: FiniteSpace, cod: FiniteSpace, lineinfo=None) -> list[int]:
    table: list[int | None] = [None] * dom.n
    for src, dst, where in pairs:
        try:
            i, j = dom.ground.index(src), cod.ground.index(dst)
        except KeyError as exc:
            raise SpaceFormatError(exc.args[0], where) from None
        if table[i] is not None:
            raise SpaceFormatError(f"point {src!r} mapped twice", where)
        table[i] = j
    missing = [dom.ground.labels[i] for i, t in enumerate(table) if t is None]
    if missing:
        raise SpaceFormatError(f"map is not total: no image for {', '.join(missing)}")
    return table


def parse_map(text: str, base_dir: str = ".") -> SpaceMap:
    """Parse a map document; space references are resolved relative to ``base_dir``."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpaceFormatError(exc.msg, exc.lineno, exc.colno) from None
        dom = _resolve_space(doc["domain"], base_dir)
        cod = _resolve_space(doc["codomain"], base_dir)
        tab = doc["table"]
        items = tab.items() if isinstance(tab, dict) else tab
        return SpaceMap(dom, cod, _table_from_pairs(((s, d, None) for s, d in items), dom, cod))

    dom = cod = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        rest = rest.strip()
        if not sep:
            raise SpaceFormatError("expected 'domain:', 'codomain:' or 'map:'", lineno, 1)
        if key == "domain":
            dom = _resolve_space(rest, base_dir)
        elif key == "codomain":
            cod = _resolve_space(rest, base_dir)
        elif key == "map":
            src, arrow, dst = rest.partition("->")
            if not arrow:
                raise SpaceFormatError("expected 'map: <point> -> <point>'", lineno, len(key) + 2)
            pairs.append((src.strip(), dst.strip(), lineno))
        else:
            raise SpaceFormatError(f"unknown key {key!r}", lineno, 1)
    if dom is None or cod is None:
        raise SpaceFormatError("map document needs both 'domain:' and 'codomain:'")
    return SpaceMap(dom, cod, _table_from_pairs(pairs, dom, cod))


def load_map(path) -> SpaceMap:
    with open(path, encoding="utf-8") as fh:
        return parse_map(fh.read(), os.path.dirname(os.path.abspath(path)))


def map_to_document(f: SpaceMap) -> dict:
    dl, cl = f.domain.ground.labels, f.codomain.ground.labels
    return {"domain": space_to_document(f.domain), "codomain": space_to_document(f.codomain),
            "table": [[dl[i], cl[t]] for i, t in enumerate(f.table)]}
