"""Generalized open/closed set classes and their closure/interior operators.

Everything for a space is tabulated once over all ``2**n`` subsets in a
:class:`SetAlgebra` (cached per space). Quantified definitions such as
"``scl(A) ⊆ U`` for every c*-open ``U ⊇ A``" reduce to a single comparison
against the meet of the qualifying supersets, which we get for every ``A`` at
once from a superset-meet transform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from functools import lru_cache

import numpy as np

from .core import FiniteSpace, members

SCAN_BUDGET = 16


class BudgetExceeded(RuntimeError):
    """A request would scan more instances than the configured budget allows."""


class ClosureKind(str, enum.Enum):
    SEMI = "semi"
    CSTAR = "cstar"
    SCSTAR = "scstar"


class SetClass(str, enum.Enum):
    """The 16 public set-class selectors (stable names used by the CLI and reports)."""

    OPEN = "open"
    CLOSED = "closed"
    REGULAR_OPEN = "regular-open"
    REGULAR_CLOSED = "regular-closed"
    SEMI_OPEN = "semi-open"
    SEMI_CLOSED = "semi-closed"
    CSTAR_OPEN = "cstar-open"
    CSTAR_CLOSED = "cstar-closed"
    SCSTAR_OPEN = "scstar-open"
    SCSTAR_CLOSED = "scstar-closed"
    G_OPEN = "g-open"
    G_CLOSED = "g-closed"
    GSCSTAR_OPEN = "gscstar-open"
    GSCSTAR_CLOSED = "gscstar-closed"
    SCSTAR_G_OPEN = "scstar-g-open"
    SCSTAR_G_CLOSED = "scstar-g-closed"

    @property
    def field(self) -> str:
        return self.value.replace("-", "_")

    @classmethod
    def parse(cls, text: str) -> "SetClass":
        key = text.strip().lower().replace("_", "-").replace("*", "star")
        for c in cls:
            if c.value == key:
                return c
        raise ValueError(f"unknown set class {text!r}; expected one of "
                         + ", ".join(c.value for c in cls))


@dataclass(frozen=True)
class SubsetClassification:
    open: bool
    closed: bool
    regular_open: bool
    regular_closed: bool
    semi_open: bool
    semi_closed: bool
    cstar_open: bool
    cstar_closed: bool
    scstar_open: bool
    scstar_closed: bool
    g_open: bool
    g_closed: bool
    gscstar_open: bool
    gscstar_closed: bool
    scstar_g_open: bool
    scstar_g_closed: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


CLASS_FIELDS = tuple(f.name for f in fields(SubsetClassification))


def _superset_meet(member: np.ndarray, n: int) -> np.ndarray:
    """For each mask ``m``: intersection of all family members containing ``m``.

    Masks with no such member get the full set (empty intersection).
    """
    full = (1 << n) - 1
    g = np.where(member, np.arange(1 << n, dtype=np.int64), full)
    for i in range(n):
        v = g.reshape(-1, 2, 1 << i)
        v[:, 0, :] &= v[:, 1, :]
    return g


def _subset_join(member: np.ndarray, n: int) -> np.ndarray:
    """For each mask ``m``: union of all family members contained in ``m``."""
    g = np.where(member, np.arange(1 << n, dtype=np.int64), 0)
    for i in range(n):
        v = g.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= v[:, 0, :]
    return g


def _subset(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a & ~b) == 0


class SetAlgebra:
    """All set classes and operators of one space, tabulated over every subset.

    Attribute tables are plain lists indexed by mask (fast scalar lookup);
    ``flags[name]`` holds the matching numpy boolean array.
    """

    def __init__(self, space: FiniteSpace):
        n = space.n
        if n > SCAN_BUDGET:
            raise BudgetExceeded(f"{n} points exceeds the scan budget of {SCAN_BUDGET}")
        self.space = space
        self.n = n
        self.full = full = (1 << n) - 1
        size = 1 << n
        m = np.arange(size, dtype=np.int64)
        comp = full ^ m

        is_open = np.zeros(size, dtype=bool)
        is_open[list(space.opens)] = True
        interior = _subset_join(is_open, n)
        closure = full ^ interior[comp]
        kernel = _superset_meet(is_open, n)  # smallest open superset

        int_cl = interior[closure]
        cl_int = closure[interior]
        regular_open = int_cl == m
        semi_open = _subset(m, cl_int)
        cstar_open = _subset(int_cl, m) & semi_open
        semi_closed = semi_open[comp]
        cstar_closed = cstar_open[comp]

        scl = _superset_meet(semi_closed, n)
        ccl = _superset_meet(cstar_closed, n)
        scstar_closed = _subset(scl, _superset_meet(cstar_open, n))
        scstar_open = scstar_closed[comp]
        sccl = _superset_meet(scstar_closed, n)
        scstar_open_meet = _superset_meet(scstar_open, n)

        g_closed = _subset(closure, kernel)
        gscstar_closed = _subset(sccl, kernel)
        scstar_g_closed = _subset(sccl, scstar_open_meet)

        closed = is_open[comp]
        self.flags = {
            "open": is_open,
            "closed": closed,
            "regular_open": regular_open,
            "regular_closed": regular_open[comp],
            "semi_open": semi_open,
            "semi_closed": semi_closed,
            "cstar_open": cstar_open,
            "cstar_closed": cstar_closed,
            "scstar_open": scstar_open,
            "scstar_closed": scstar_closed,
            "g_open": g_closed[comp],
            "g_closed": g_closed,
            "gscstar_open": gscstar_closed[comp],
            "gscstar_closed": gscstar_closed,
            "scstar_g_open": scstar_g_closed[comp],
            "scstar_g_closed": scstar_g_closed,
        }
        self.int = interior.tolist()
        self.cl = closure.tolist()
        self.kernel = kernel.tolist()
        self.closures = {
            ClosureKind.SEMI: scl.tolist(),
            ClosureKind.CSTAR: ccl.tolist(),
            ClosureKind.SCSTAR: sccl.tolist(),
        }
        self.interiors = {k: (full ^ np.asarray(v)[comp]).tolist() for k, v in self.closures.items()}
        self.scl = self.closures[ClosureKind.SEMI]
        self.sccl = self.closures[ClosureKind.SCSTAR]
        self.scint = self.interiors[ClosureKind.SCSTAR]
        self._lists = {k: v.tolist() for k, v in self.flags.items()}
        self._families: dict[str, list[int]] = {}

    def has(self, cls: str, a: int) -> bool:
        return self._lists[cls][a]

    def table(self, cls: str) -> list[bool]:
        return self._lists[cls]

    def members(self, cls: str) -> list[int]:
        fam = self._families.get(cls)
        if fam is None:
            fam = np.flatnonzero(self.flags[cls]).tolist()
            self._families[cls] = fam
        return fam

    def classify(self, a: int) -> SubsetClassification:
        return SubsetClassification(**{k: bool(self._lists[k][a]) for k in CLASS_FIELDS})


@lru_cache(maxsize=4096)
def algebra(space: FiniteSpace) -> SetAlgebra:
    return SetAlgebra(space)


def _check(space: FiniteSpace, a: int) -> None:
    if a < 0 or a >> space.n:
        raise ValueError(f"mask {a:#x} does not fit a {space.n}-point space")


def gen_closure(space: FiniteSpace, a: int, kind: ClosureKind | str) -> int:
    """Intersection of all ``kind``-closed supersets of ``a``.

    For ``scstar`` the result need not be SC*-closed itself; see
    :func:`scstar_closure_is_closed`.
    """
    _check(space, a)
    return algebra(space).closures[ClosureKind(kind)][a]


def gen_interior(space: FiniteSpace, a: int, kind: ClosureKind | str) -> int:
    """Union of all ``kind``-open subsets of ``a``."""
    _check(space, a)
    return algebra(space).interiors[ClosureKind(kind)][a]


def scstar_closure_is_closed(space: FiniteSpace, a: int) -> bool:
    """Diagnostic: is the SC*-closure of ``a`` itself SC*-closed?"""
    alg = algebra(space)
    return alg.has("scstar_closed", alg.sccl[a])


def classify_subset(space: FiniteSpace, a: int) -> SubsetClassification:
    _check(space, a)
    return algebra(space).classify(a)


def family(space: FiniteSpace, cls: SetClass | str, budget: int = SCAN_BUDGET) -> list[int]:
    """All subsets in class ``cls``, ascending mask order."""
    if space.n > budget:
        raise BudgetExceeded(f"{space.n} points exceeds the scan budget of {budget}")
    if isinstance(cls, str) and not isinstance(cls, SetClass):
        cls = SetClass.parse(cls)
    return list(algebra(space).members(cls.field))


def is_scstar_nbd(space: FiniteSpace, x: int, nbd: int) -> bool:
    """Is ``nbd`` an SC*-neighbourhood of point ``x``?

    Read as: some SC*-open ``W`` has ``x ∈ W ⊆ nbd``. Since the SC*-interior is
    the union of the SC*-open subsets, that is just ``x ∈ SC*-int(nbd)``.
    """
    if not 0 <= x < space.n:
        raise ValueError(f"point index {x} out of range")
    _check(space, nbd)
    return bool(algebra(space).scint[nbd] >> x & 1)


def gscstar_open_via_lemma53(space: FiniteSpace, a: int) -> bool:
    """Every closed ``F ⊆ a`` lies inside ``SC*-int(a)``."""
    _check(space, a)
    inner = algebra(space).scint[a]
    return all(f & ~inner == 0 for f in space.closeds if f & ~a == 0)


def scstar_closure_idempotent(space: FiniteSpace, a: int) -> bool:
    sccl = algebra(space).sccl
    return sccl[sccl[a]] == sccl[a]


def format_family(space: FiniteSpace, masks) -> list[list[str]]:
    return [space.ground.names(m) for m in masks]


__all__ = [
    "BudgetExceeded", "ClosureKind", "SetClass", "SubsetClassification", "SetAlgebra",
    "algebra", "gen_closure", "gen_interior", "classify_subset", "family", "is_scstar_nbd",
    "gscstar_open_via_lemma53", "scstar_closure_is_closed", "scstar_closure_idempotent",
]
