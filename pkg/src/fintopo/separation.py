"""Normality variants and the condition batteries characterising SC*-normality."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .core import FiniteSpace
from .operators import SetAlgebra, algebra


@dataclass(frozen=True)
class Thm24Conditions:
    c1: bool
    c2: bool
    c3: bool


@dataclass(frozen=True)
class Thm51Conditions:
    a: bool
    b: bool
    c: bool
    d: bool
    e: bool
    f: bool
    g: bool


@dataclass(frozen=True)
class SeparationProfile:
    normal: bool
    g_normal: bool
    scstar_normal: bool
    thm24: Thm24Conditions
    thm51: Thm51Conditions

    def flat(self) -> dict[str, bool]:
        """Fixed field order used in every report."""
        out = {"normal": self.normal, "g_normal": self.g_normal,
               "scstar_normal": self.scstar_normal}
        for f in fields(self.thm24):
            out[f"thm24.{f.name}"] = getattr(self.thm24, f.name)
        for f in fields(self.thm51):
            out[f"thm51.{f.name}"] = getattr(self.thm51, f.name)
        return out


def _disjoint_closed_pairs(space: FiniteSpace):
    cs = space.closeds
    for a in cs:
        for b in cs:
            if a & b == 0:
                yield a, b


def separated(alg: SetAlgebra, cls: str, a: int, b: int, disjoint: bool = True) -> bool:
    """Do members ``U ⊇ a`` and ``V ⊇ b`` of ``cls`` exist (disjoint unless told otherwise)?"""
    fam = alg.members(cls)
    ups = [u for u in fam if a & ~u == 0]
    vs = [v for v in fam if b & ~v == 0]
    if not disjoint:
        return bool(ups) and bool(vs)
    return any(u & v == 0 for u in ups for v in vs)


def is_normal_like(space: FiniteSpace, cls: str, lenient: bool = False) -> bool:
    """Disjoint closed sets are separated by ``cls`` sets.

    ``cls`` is ``"open"``, ``"g_open"`` or ``"scstar_open"``. With ``lenient`` the
    separating sets are not required to be disjoint.
    """
    alg = algebra(space)
    return all(separated(alg, cls, a, b, disjoint=not lenient)
               for a, b in _disjoint_closed_pairs(space))


def _approximable(alg: SetAlgebra, cls: str, lo: int, hi: int) -> bool:
    """Some ``U`` in ``cls`` with ``lo ⊆ U`` and ``SC*-cl(U) ⊆ hi``."""
    sccl = alg.sccl
    for u in alg.members(cls):
        if lo & ~u == 0 and sccl[u] & ~hi == 0:
            return True
    return False


def thm24_conditions(space: FiniteSpace, lenient: bool = False) -> Thm24Conditions:
    alg = algebra(space)
    full = space.full
    c1 = is_normal_like(space, "scstar_open", lenient)

    sc_closed = alg.members("scstar_closed")
    c2 = True
    for u in space.opens:
        for v in space.opens:
            if u | v != full:
                continue
            inside_u = [a for a in sc_closed if a & ~u == 0]
            inside_v = [b for b in sc_closed if b & ~v == 0]
            if not any(a | b == full for a in inside_u for b in inside_v):
                c2 = False
                break
        if not c2:
            break

    c3 = all(_approximable(alg, "scstar_open", h, k)
             for h in space.closeds for k in space.opens if h & ~k == 0)
    return Thm24Conditions(c1, c2, c3)


def thm51_conditions(space: FiniteSpace, lenient: bool = False) -> Thm51Conditions:
    alg = algebra(space)
    cl, int_ = alg.cl, alg.int
    closeds = space.closeds
    opens = space.opens
    g_open = alg.members("g_open")
    g_closed = alg.members("g_closed")

    a = is_normal_like(space, "scstar_open", lenient)
    b = all(separated(alg, "gscstar_open", p, q, disjoint=not lenient)
            for p, q in _disjoint_closed_pairs(space))
    c = all(_approximable(alg, "gscstar_open", cl[p], q)
            for p in closeds for q in opens if p & ~q == 0)
    d = all(_approximable(alg, "scstar_open", p, int_[q])
            for p in closeds for q in g_open if p & ~q == 0)
    e = all(_approximable(alg, "gscstar_open", p, int_[q])
            for p in closeds for q in g_open if p & ~q == 0)
    f = all(_approximable(alg, "scstar_open", cl[p], q)
            for p in g_closed for q in opens if p & ~q == 0)
    g = all(_approximable(alg, "gscstar_open", cl[p], q)
            for p in g_closed for q in opens if p & ~q == 0)
    return Thm51Conditions(a, b, c, d, e, f, g)


def separation_profile(space: FiniteSpace, lenient: bool = False) -> SeparationProfile:
    """Normal / g-normal / SC*-normal flags plus both condition batteries.

    By default the separating sets must be disjoint; ``lenient=True`` drops
    that requirement (the literal wording of the definition).
    """
    return SeparationProfile(
        normal=is_normal_like(space, "open", lenient),
        g_normal=is_normal_like(space, "g_open", lenient),
        scstar_normal=is_normal_like(space, "scstar_open", lenient),
        thm24=thm24_conditions(space, lenient),
        thm51=thm51_conditions(space, lenient),
    )
