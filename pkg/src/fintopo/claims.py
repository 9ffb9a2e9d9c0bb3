"""Claim catalog, exhaustive claim runner and counterexample miner.

Each claim is data: a quantifier domain, hypothesis predicates and either one
conclusion predicate or an equivalence group. Predicates are evaluated once per
instance into boolean numpy tables; a claim is then a handful of array ops and
its first violation (in the fixed enumeration order) is the minimal witness.

Domains and their predicate names:

``subsets``   set-class flags plus closure diagnostics, per (space, subset)
``spaces``    separation profile fields (``normal``, ``thm24.c2``, ...)
``maps``      map profile and characterization fields, plus ``X.*`` / ``Y.*``
              separation fields of the domain / codomain
``map_pairs`` ``f.*``, ``g.*`` and ``gf.*`` map fields for ``f: X->Y, g: Y->Z``
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteSpace, space_from_document, space_to_document
from .enumeration import KNOWN_COUNTS, MAX_N, HARD_MAX_N, compose_index_table, tables, topologies
from .maps import MAP_PREDICATES, SpaceMap, compose, map_record
from .operators import CLASS_FIELDS, BudgetExceeded, ClosureKind, algebra, gscstar_open_via_lemma53
from .separation import separation_profile

SPACE_PREDICATES = ("normal", "g_normal", "scstar_normal", "thm24.c1", "thm24.c2", "thm24.c3",
                    "thm51.a", "thm51.b", "thm51.c", "thm51.d", "thm51.e", "thm51.f", "thm51.g")
SUBSET_PREDICATES = CLASS_FIELDS + ("lemma53", "scl_semi_closed", "ccl_cstar_closed",
                                    "sccl_scstar_closed", "sccl_idempotent")


class UnknownClaim(KeyError):
    pass


class ForcedClaimViolation(AssertionError):
    pass


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    domain: str
    hypothesis: tuple[str, ...]
    conclusion: str | tuple[str, ...]
    status: str
    statement: str

    @property
    def is_equivalence(self) -> bool:
        return isinstance(self.conclusion, tuple)

    @property
    def predicates(self) -> tuple[str, ...]:
        concl = self.conclusion if self.is_equivalence else (self.conclusion,)
        return self.hypothesis + concl


def _c(id, domain, hyp, concl, status, statement):
    return ClaimSpec(id, domain, tuple(hyp), concl, status, statement)


FORCED, PAPER, PROBE = "forced", "paper_claim", "probe"

CATALOG: tuple[ClaimSpec, ...] = (
    # set classes
    _c("D1.1a", "subsets", ["regular_open"], "cstar_open", FORCED, "regular open => c*-open"),
    _c("D1.1b", "subsets", ["cstar_open"], "semi_open", FORCED, "c*-open => semi-open"),
    _c("D1.1c", "subsets", ["open"], "semi_open", FORCED, "open => semi-open"),
    _c("D1.1d", "subsets", [], "scl_semi_closed", FORCED, "scl(A) is semi-closed"),
    # c*-closed sets are not intersection-stable, so this one is checked, not assumed
    _c("D1.1e", "subsets", [], "ccl_cstar_closed", PAPER,
       "c*-cl(A), the intersection of c*-closed supersets, is c*-closed"),
    _c("D1.2a", "subsets", [], "sccl_scstar_closed", PROBE, "SC*-cl(A) is SC*-closed"),
    _c("D1.2b", "subsets", [], "sccl_idempotent", PROBE, "SC*-cl(SC*-cl(A)) = SC*-cl(A)"),
    _c("R1.4a", "subsets", ["closed"], "scstar_closed", FORCED, "closed => SC*-closed"),
    _c("R1.4b", "subsets", ["scstar_closed"], "scstar_g_closed", FORCED,
       "SC*-closed => SC*g-closed"),
    _c("R1.4c", "subsets", ["scstar_g_closed"], "gscstar_closed", FORCED,
       "SC*g-closed => gSC*-closed"),
    _c("R1.4d", "subsets", ["gscstar_closed"], "scstar_closed", PAPER,
       "gSC*-closed => SC*-closed"),
    _c("R1.4e", "subsets", ["scstar_g_closed"], "scstar_closed", PAPER,
       "SC*g-closed => SC*-closed"),
    _c("R1.4f", "subsets", ["gscstar_closed"], "scstar_g_closed", PAPER,
       "gSC*-closed => SC*g-closed"),
    _c("R1.4g", "subsets", ["closed"], "g_closed", FORCED, "closed => g-closed"),
    _c("R1.4h", "subsets", ["gscstar_closed"], "g_closed", PAPER,
       "gSC*-closed => g-closed (alternative reading of the downward arrow)"),
    _c("L5.3", "subsets", [], ("gscstar_open", "lemma53"), PAPER,
       "A gSC*-open <=> every closed F ⊆ A lies in SC*-int(A)"),
    # spaces
    _c("R2.2a", "spaces", ["normal"], "g_normal", FORCED, "normal => g-normal"),
    _c("R2.2b", "spaces", ["g_normal"], "scstar_normal", PAPER, "g-normal => SC*-normal"),
    _c("T2.4", "spaces", [], ("thm24.c1", "thm24.c2", "thm24.c3"), PAPER,
       "SC*-normal <=> open-cover condition <=> SC*-open shrinking condition"),
    _c("T5.1", "spaces", [], tuple(f"thm51.{k}" for k in "abcdefg"), PAPER,
       "conditions (a)-(g) are equivalent"),
    # maps
    _c("T3.3", "maps", [], ("strongly_scstar_closed", "thm33_rhs"), PAPER,
       "strongly SC*-closed <=> SC*-open factorization of preimage covers"),
    _c("L3.4", "maps", [], ("almost_scstar_irresolute", "lemma34_rhs"), PAPER,
       "almost SC*-irresolute <=> f^-1(V) ⊆ SC*-int(SC*-cl(f^-1(V))) for SC*-open V"),
    _c("T3.5", "maps", [], ("almost_scstar_irresolute", "thm35_rhs"), PAPER,
       "almost SC*-irresolute <=> f(SC*-cl(U)) ⊆ SC*-cl(f(U)) for SC*-open U"),
    _c("T3.6", "maps", ["X.scstar_normal", "strongly_scstar_open", "continuous",
                        "almost_scstar_irresolute", "surjective"], "Y.scstar_normal", PAPER,
       "strongly SC*-open, cont., almost SC*-irresolute surjection preserves SC*-normality"),
    _c("T3.7", "maps", ["X.scstar_normal", "strongly_scstar_closed", "continuous", "surjective"],
       "Y.scstar_normal", PAPER,
       "strongly SC*-closed, cont. surjection preserves SC*-normality"),
    _c("L4.7", "maps", [], ("scstar_gscstar_closed", "lemma47_rhs"), PAPER,
       "SC*-gSC*-closed <=> gSC*-open factorization of preimage covers"),
    _c("T4.8", "maps", ["continuous", "scstar_gscstar_closed"], "image_gscstar_closed", PAPER,
       "cont. SC*-gSC*-closed maps send gSC*-closed sets to gSC*-closed sets"),
    _c("R4.9", "maps", ["scstar_irresolute"], "scstar_gscstar_continuous", FORCED,
       "SC*-irresolute => SC*-gSC*-continuous"),
    _c("T4.10", "maps", [], ("scstar_gscstar_continuous", "preimage_scstar_open_is_gscstar_open"),
       FORCED, "SC*-gSC*-continuous <=> preimages of SC*-open sets are gSC*-open"),
    _c("T4.11", "maps", ["scstar_gscstar_continuous"], "preimage_gscstar_closed", PAPER,
       "SC*-gSC*-continuous => preimages of gSC*-closed sets are gSC*-closed"),
    _c("C4.12", "maps", ["closed_map", "scstar_irresolute"], "preimage_gscstar_closed", PAPER,
       "closed SC*-irresolute => preimages of gSC*-closed sets are gSC*-closed"),
    _c("T4.13", "maps", ["bijective", "open_map", "scstar_gscstar_continuous"],
       "preimage_gscstar_closed", PAPER,
       "bijective open SC*-gSC*-continuous => preimages of gSC*-closed sets are gSC*-closed"),
    _c("L5.6", "maps", [], ("almost_gscstar_closed", "lemma56_rhs"), PAPER,
       "almost gSC*-closed <=> gSC*-open factorization over regular open covers"),
    _c("L5.7", "maps", ["almost_gscstar_closed"], "lemma57_rhs", PAPER,
       "almost gSC*-closed => SC*-open factorization of closed sets over regular open covers"),
    _c("T5.2", "maps", ["X.scstar_normal", "continuous", "quasi_scstar_closed", "surjective"],
       "Y.normal", PAPER, "cont. quasi SC*-closed surjection from SC*-normal X gives normal Y"),
    _c("T5.4", "maps", ["Y.scstar_normal", "closed_map", "injective", "scstar_gscstar_continuous"],
       "X.scstar_normal", PAPER,
       "closed injective SC*-gSC*-continuous map into SC*-normal Y gives SC*-normal X"),
    _c("C5.5", "maps", ["Y.scstar_normal", "closed_map", "scstar_irresolute", "injective"],
       "X.scstar_normal", PAPER,
       "closed SC*-irresolute injection into SC*-normal Y gives SC*-normal X"),
    _c("T5.8", "maps", ["X.normal", "continuous", "almost_gscstar_closed", "surjective"],
       "Y.scstar_normal", PAPER,
       "cont. almost gSC*-closed surjection from normal X gives SC*-normal Y"),
    _c("C5.9", "maps", ["X.normal", "continuous", "scstar_closed_map", "surjective"],
       "Y.scstar_normal", PAPER, "cont. SC*-closed surjection from normal X gives SC*-normal Y"),
    _c("C5.9a", "maps", ["scstar_closed_map"], "almost_gscstar_closed", FORCED,
       "SC*-closed map => almost gSC*-closed"),
    # map pairs
    _c("T4.5a", "map_pairs", ["f.scstar_gscstar_closed", "g.continuous", "g.scstar_gscstar_closed"],
       "gf.scstar_gscstar_closed", PAPER, "composition rule (1)"),
    _c("T4.5b", "map_pairs", ["f.strongly_scstar_closed", "g.scstar_gscstar_closed"],
       "gf.scstar_gscstar_closed", PAPER, "composition rule (2)"),
    _c("T4.5c", "map_pairs", ["f.quasi_scstar_closed", "g.gscstar_closed_map"],
       "gf.scstar_gscstar_closed", PAPER, "composition rule (3)"),
    _c("T4.6", "map_pairs", ["gf.scstar_gscstar_closed", "f.surjective", "f.scstar_irresolute"],
       "g.scstar_gscstar_closed", PAPER, "cancellation through a surjective SC*-irresolute f"),
    _c("T4.14", "map_pairs", ["gf.scstar_gscstar_closed", "g.bijective", "g.open_map",
                              "g.scstar_gscstar_continuous"],
       "f.scstar_gscstar_closed", PAPER, "cancellation through a bijective open g"),
    _c("T4.15a", "map_pairs", ["gf.scstar_gscstar_closed", "g.injective",
                               "g.scstar_gscstar_continuous"],
       "f.scstar_gscstar_closed", PAPER, "cancellation through an injective g (as stated)"),
    _c("T4.15b", "map_pairs", ["gf.scstar_gscstar_closed", "g.injective", "g.closed_map",
                               "g.scstar_gscstar_continuous"],
       "f.scstar_gscstar_closed", PAPER, "cancellation through a closed injective g (as proved)"),
)

CLAIMS = {c.id: c for c in CATALOG}

SUITES = {
    "forced": [c.id for c in CATALOG if c.status == FORCED],
    "paper": [c.id for c in CATALOG if c.status == PAPER],
    "probes": [c.id for c in CATALOG if c.status == PROBE],
    "all": [c.id for c in CATALOG],
    "separation": ["T2.4", "T5.1"],
}


def resolve_suite(spec: str | Sequence[str]) -> list[str]:
    """A suite name, a comma-separated id list, or a sequence of ids."""
    if isinstance(spec, str):
        if spec in SUITES:
            return list(SUITES[spec])
        spec = [s for s in (p.strip() for p in spec.split(",")) if s]
    ids = list(spec)
    for cid in ids:
        if cid not in CLAIMS:
            raise UnknownClaim(f"unknown claim id {cid!r}")
    return ids


# -- bounds ------------------------------------------------------------------------

@dataclass(frozen=True)
class Bounds:
    max_n: int = 4
    max_map_size: int = 3
    max_pair_size: int = 3
    lenient_def21: bool = False
    map_budget: int = 1_000_000
    pair_budget: int = 50_000_000

    def __post_init__(self):
        if not 1 <= self.max_n <= HARD_MAX_N:
            raise ValueError(f"max_n must be in 1..{HARD_MAX_N}")
        for v in (self.max_map_size, self.max_pair_size):
            if not 1 <= v <= MAX_N:
                raise ValueError(f"map sizes must be in 1..{MAX_N}")

    def for_domain(self, domain: str) -> dict:
        if domain in ("subsets", "spaces"):
            return {"max_n": self.max_n}
        if domain == "maps":
            return {"max_map_size": self.max_map_size}
        return {"max_pair_size": self.max_pair_size}


def estimate(domain: str, bounds: Bounds) -> int:
    """Number of instances a domain would enumerate (from published topology counts)."""
    T = KNOWN_COUNTS
    if domain == "spaces":
        return sum(T[n] for n in range(1, bounds.max_n + 1))
    if domain == "subsets":
        return sum(T[n] << n for n in range(1, bounds.max_n + 1))
    sizes = range(1, (bounds.max_map_size if domain == "maps" else bounds.max_pair_size) + 1)
    if domain == "maps":
        return sum(T[a] * T[b] * b ** a for a in sizes for b in sizes)
    return sum(T[a] * T[b] * T[c] * b ** a * c ** b for a in sizes for b in sizes for c in sizes)


def _check_budget(domain: str, bounds: Bounds) -> None:
    if domain in ("maps", "map_pairs"):
        maps = estimate("maps", Bounds(max_map_size=(bounds.max_map_size if domain == "maps"
                                                     else bounds.max_pair_size)))
        if maps > bounds.map_budget:
            raise BudgetExceeded(f"{domain}: {maps} maps exceeds budget {bounds.map_budget}")
    if domain == "map_pairs":
        pairs = estimate(domain, bounds)
        if pairs > bounds.pair_budget:
            raise BudgetExceeded(f"map_pairs: {pairs} pairs exceeds budget {bounds.pair_budget}")


# -- per-instance evaluation (also used for witness replay) ------------------------

def subset_values(space: FiniteSpace) -> dict[str, list[bool]]:
    """Every subset predicate for every subset of ``space`` (lists indexed by mask)."""
    alg = algebra(space)
    out = {k: alg.table(k) for k in CLASS_FIELDS}
    semi_c, cstar_c, sc_c = alg.table("semi_closed"), alg.table("cstar_closed"), alg.table("scstar_closed")
    ccl = alg.closures[ClosureKind.CSTAR]
    rng = range(1 << space.n)
    out["lemma53"] = [gscstar_open_via_lemma53(space, a) for a in rng]
    out["scl_semi_closed"] = [semi_c[alg.scl[a]] for a in rng]
    out["ccl_cstar_closed"] = [cstar_c[ccl[a]] for a in rng]
    out["sccl_scstar_closed"] = [sc_c[alg.sccl[a]] for a in rng]
    out["sccl_idempotent"] = [alg.sccl[alg.sccl[a]] == alg.sccl[a] for a in rng]
    return out


@lru_cache(maxsize=None)
def _space_values(space: FiniteSpace, lenient: bool) -> dict[str, bool]:
    return separation_profile(space, lenient).flat()


def space_values(space: FiniteSpace, lenient: bool = False) -> dict[str, bool]:
    return _space_values(space, lenient)


def map_values(f: SpaceMap, lenient: bool = False) -> dict[str, bool]:
    out = map_record(f)
    for k, v in space_values(f.domain, lenient).items():
        out["X." + k] = v
    for k, v in space_values(f.codomain, lenient).items():
        out["Y." + k] = v
    return out


def pair_values(f: SpaceMap, g: SpaceMap) -> dict[str, bool]:
    out = {}
    for prefix, h in (("f.", f), ("g.", g), ("gf.", compose(f, g))):
        for k, v in map_record(h).items():
            out[prefix + k] = v
    return out


# -- vectorized tables ---------------------------------------------------------------

@lru_cache(maxsize=None)
def subset_table(n: int) -> dict[str, np.ndarray]:
    spaces = topologies(n)
    rows = [subset_values(s) for s in spaces]
    return {k: np.array([r[k] for r in rows], dtype=bool) for k in SUBSET_PREDICATES}


@lru_cache(maxsize=None)
def space_table(n: int, lenient: bool) -> dict[str, np.ndarray]:
    rows = [space_values(s, lenient) for s in topologies(n)]
    return {k: np.array([r[k] for r in rows], dtype=bool) for k in SPACE_PREDICATES}


def _map_chunk(args) -> np.ndarray:
    nx, ny, ix = args
    X = topologies(nx)[ix]
    tbls = list(tables(nx, ny))
    out = np.zeros((len(topologies(ny)), len(tbls), len(MAP_PREDICATES)), dtype=bool)
    for iy, Y in enumerate(topologies(ny)):
        for it, t in enumerate(tbls):
            rec = map_record(SpaceMap(X, Y, t))
            out[iy, it] = [rec[k] for k in MAP_PREDICATES]
    return out


_MAP_TABLES: dict[tuple[int, int], dict[str, np.ndarray]] = {}


def map_table(nx: int, ny: int, workers: int = 1) -> dict[str, np.ndarray]:
    """Map predicates for all maps between all ``nx``- and ``ny``-point spaces,
    as arrays of shape ``(T(nx), T(ny), ny**nx)``."""
    key = (nx, ny)
    if key not in _MAP_TABLES:
        jobs = [(nx, ny, ix) for ix in range(len(topologies(nx)))]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                chunks = list(pool.map(_map_chunk, jobs))
        else:
            chunks = [_map_chunk(j) for j in jobs]
        arr = np.stack(chunks)
        _MAP_TABLES[key] = {k: arr[..., i] for i, k in enumerate(MAP_PREDICATES)}
    return _MAP_TABLES[key]


def clear_caches() -> None:
    """Drop every memoized table so the next run recomputes from scratch."""
    _MAP_TABLES.clear()
    subset_table.cache_clear()
    space_table.cache_clear()
    _space_values.cache_clear()
    algebra.cache_clear()
    _compose.cache_clear()


@lru_cache(maxsize=None)
def _compose(nx: int, ny: int, nz: int) -> np.ndarray:
    return np.array(compose_index_table(nx, ny, nz), dtype=np.intp)


# -- witnesses -----------------------------------------------------------------------

@dataclass
class WitnessRecord:
    """A concrete instance: spaces, map tables and/or a subset, plus the
    predicate values that exhibit the violation (or the mined property)."""

    claim: str
    domain: str
    spaces: list[dict]
    maps: list[list[list[str]]] = field(default_factory=list)
    subset: list[str] | None = None
    failed: str = ""
    values: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "domain": self.domain, "spaces": self.spaces}
        if self.maps:
            d["maps"] = self.maps
        if self.subset is not None:
            d["subset"] = self.subset
        d["failed"] = self.failed
        d["values"] = self.values
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "WitnessRecord":
        return cls(d["claim"], d["domain"], d["spaces"], d.get("maps", []), d.get("subset"),
                   d.get("failed", ""), d.get("values", {}))

    def instance(self):
        """Rebuild the spaces/maps/subset this witness describes."""
        spaces = [space_from_document(s) for s in self.spaces]
        maps = []
        for k, pairs in enumerate(self.maps):
            dom, cod = spaces[k], spaces[k + 1]
            maps.append(SpaceMap(dom, cod, [cod.ground.index(b) for _, b in pairs]))
        subset = spaces[0].mask(self.subset) if self.subset is not None else None
        return spaces, maps, subset


def _map_pairs_doc(f: SpaceMap) -> list[list[str]]:
    dl, cl = f.domain.ground.labels, f.codomain.ground.labels
    return [[dl[i], cl[t]] for i, t in enumerate(f.table)]


def instance_values(domain: str, spaces, maps, subset, lenient: bool = False) -> dict[str, bool]:
    if domain == "subsets":
        vals = subset_values(spaces[0])
        return {k: bool(v[subset]) for k, v in vals.items()}
    if domain == "spaces":
        return dict(space_values(spaces[0], lenient))
    if domain == "maps":
        return map_values(maps[0], lenient)
    return pair_values(maps[0], maps[1])


def _violates(claim: ClaimSpec, vals: dict[str, bool]) -> tuple[bool, str]:
    if not all(vals[h] for h in claim.hypothesis):
        return False, ""
    if claim.is_equivalence:
        group = [vals[c] for c in claim.conclusion]
        if len(set(group)) > 1:
            return True, " vs ".join(f"{c}={vals[c]}" for c in claim.conclusion)
        return False, ""
    if not vals[claim.conclusion]:
        return True, claim.conclusion
    return False, ""


def replay(witness: WitnessRecord, lenient: bool = False) -> bool:
    """Re-evaluate a witness from its serialized form; True iff it still violates its claim."""
    claim = CLAIMS[witness.claim]
    spaces, maps, subset = witness.instance()
    vals = instance_values(claim.domain, spaces, maps, subset, lenient)
    return _violates(claim, vals)[0]


def _make_witness(claim: ClaimSpec, spaces, maps, subset, lenient) -> WitnessRecord:
    vals = instance_values(claim.domain, spaces, maps, subset, lenient)
    _, failed = _violates(claim, vals)
    relevant = {k: bool(vals[k]) for k in claim.predicates}
    return WitnessRecord(
        claim=claim.id, domain=claim.domain,
        spaces=[space_to_document(s) for s in spaces],
        maps=[_map_pairs_doc(m) for m in maps],
        subset=spaces[0].ground.names(subset) if subset is not None else None,
        failed=failed, values=relevant)


# -- claim evaluation ---------------------------------------------------------------

@dataclass
class Verdict:
    claim: str
    status: str
    domain: str
    bounds: dict
    domain_size: int
    instances: int
    violations: int
    witness: WitnessRecord | None = None
    truth_table: dict[str, int] | None = None
    wall_time: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == FORCED and self.violations > 0

    def to_dict(self, timings: bool = False) -> dict:
        d = {"id": self.claim, "status": self.status, "domain": self.domain,
             "bounds": self.bounds, "domain_size": self.domain_size,
             "instances": self.instances, "violations": self.violations,
             "witness": self.witness.to_dict() if self.witness else None}
        if self.truth_table is not None:
            d["truth_table"] = self.truth_table
        if timings:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        w = d.get("witness")
        return cls(d["id"], d["status"], d["domain"], d["bounds"], d["domain_size"],
                   d["instances"], d["violations"], WitnessRecord.from_dict(w) if w else None,
                   d.get("truth_table"), d.get("wall_time", 0.0))


def _pattern(bits: Sequence[bool]) -> str:
    return "".join("T" if b else "F" for b in bits)


class _Tally:
    def __init__(self, claim: ClaimSpec):
        self.claim = claim
        self.domain_size = 0
        self.instances = 0
        self.violations = 0
        self.first = None
        self.table: dict[str, int] | None = {} if claim.is_equivalence else None

    def add(self, col, shape, locate):
        """``col(name)`` returns a boolean array broadcastable to ``shape``;
        ``locate(flat_index)`` turns the first violation into an instance."""
        claim = self.claim
        hyp = np.ones(shape, dtype=bool)
        for h in claim.hypothesis:
            hyp &= col(h)
        if claim.is_equivalence:
            vals = [np.broadcast_to(col(c), shape) for c in claim.conclusion]
            code = np.zeros(shape, dtype=np.int64)
            for i, v in enumerate(vals):
                code |= v.astype(np.int64) << (len(vals) - 1 - i)
            same = (code == 0) | (code == (1 << len(vals)) - 1)
            viol = hyp & ~same
            counts = np.bincount(code[hyp], minlength=1 << len(vals))
            for c, cnt in enumerate(counts.tolist()):
                if cnt:
                    key = _pattern([(c >> (len(vals) - 1 - i)) & 1 for i in range(len(vals))])
                    self.table[key] = self.table.get(key, 0) + cnt
        else:
            viol = hyp & ~np.broadcast_to(col(claim.conclusion), shape)
        self.domain_size += int(np.prod(shape))
        self.instances += int(hyp.sum())
        nv = int(viol.sum())
        self.violations += nv
        if nv and self.first is None:
            self.first = locate(int(np.argmax(viol.ravel())))


def _run_subsets(t: _Tally, bounds: Bounds):
    for n in range(1, bounds.max_n + 1):
        tab = subset_table(n)
        spaces = topologies(n)
        shape = (len(spaces), 1 << n)

        def locate(i, spaces=spaces, n=n):
            s, a = divmod(i, 1 << n)
            return [spaces[s]], [], a
        t.add(lambda k, tab=tab: tab[k], shape, locate)


def _run_spaces(t: _Tally, bounds: Bounds):
    for n in range(1, bounds.max_n + 1):
        tab = space_table(n, bounds.lenient_def21)
        spaces = topologies(n)
        t.add(lambda k, tab=tab: tab[k], (len(spaces),), lambda i, spaces=spaces: ([spaces[i]], [], None))


def _run_maps(t: _Tally, bounds: Bounds, workers: int):
    lenient = bounds.lenient_def21
    sizes = range(1, bounds.max_map_size + 1)
    for nx, ny in product(sizes, sizes):
        tab = map_table(nx, ny, workers)
        sx, sy = space_table(nx, lenient), space_table(ny, lenient)
        X, Y = topologies(nx), topologies(ny)
        tbls = list(tables(nx, ny))
        shape = (len(X), len(Y), len(tbls))

        def col(k, tab=tab, sx=sx, sy=sy):
            if k.startswith("X."):
                return sx[k[2:]][:, None, None]
            if k.startswith("Y."):
                return sy[k[2:]][None, :, None]
            return tab[k]

        def locate(i, X=X, Y=Y, tbls=tbls, shape=shape):
            ix, iy, it = np.unravel_index(i, shape)
            return [X[ix], Y[iy]], [SpaceMap(X[ix], Y[iy], tbls[it])], None
        t.add(col, shape, locate)


def _run_pairs(t: _Tally, bounds: Bounds, workers: int):
    sizes = range(1, bounds.max_pair_size + 1)
    for nx, ny, nz in product(sizes, sizes, sizes):
        fx, gy, hz = map_table(nx, ny, workers), map_table(ny, nz, workers), map_table(nx, nz, workers)
        comp = _compose(nx, ny, nz)
        X, Y, Z = topologies(nx), topologies(ny), topologies(nz)
        ftab, gtab = list(tables(nx, ny)), list(tables(ny, nz))
        shape = (len(Y), len(Z), len(ftab), len(gtab))
        for ix in range(len(X)):
            def col(k, ix=ix):
                if k.startswith("gf."):
                    return hz[k[3:]][ix][:, comp][None]
                if k.startswith("f."):
                    return fx[k[2:]][ix][:, None, :, None]
                return gy[k[2:]][:, :, None, :]

            def locate(i, ix=ix, shape=shape):
                iy, iz, jf, jg = np.unravel_index(i, shape)
                x, y, z = X[ix], Y[iy], Z[iz]
                return [x, y, z], [SpaceMap(x, y, ftab[jf]), SpaceMap(y, z, gtab[jg])], None
            t.add(col, shape, locate)


def default_workers() -> int:
    return os.cpu_count() or 1


def run_claim(claim: ClaimSpec | str, bounds: Bounds | None = None, workers: int = 1,
              strict: bool = False) -> Verdict:
    """Check one claim exhaustively within ``bounds``.

    Violations of ``forced`` claims raise :class:`ForcedClaimViolation` when
    ``strict``; otherwise every outcome is recorded in the verdict.
    """
    if isinstance(claim, str):
        if claim not in CLAIMS:
            raise UnknownClaim(f"unknown claim id {claim!r}")
        claim = CLAIMS[claim]
    bounds = bounds or Bounds()
    _check_budget(claim.domain, bounds)
    start = time.perf_counter()
    tally = _Tally(claim)
    if claim.domain == "subsets":
        _run_subsets(tally, bounds)
    elif claim.domain == "spaces":
        _run_spaces(tally, bounds)
    elif claim.domain == "maps":
        _run_maps(tally, bounds, workers)
    else:
        _run_pairs(tally, bounds, workers)
    witness = None
    if tally.first is not None:
        witness = _make_witness(claim, *tally.first, bounds.lenient_def21)
    bdict = dict(bounds.for_domain(claim.domain))
    if claim.domain != "subsets":
        bdict["lenient_def21"] = bounds.lenient_def21
    verdict = Verdict(claim.id, claim.status, claim.domain, bdict, tally.domain_size,
                      tally.instances, tally.violations, witness,
                      tally.table, time.perf_counter() - start)
    if strict and verdict.failed:
        raise ForcedClaimViolation(f"forced claim {claim.id} violated: {witness.failed}")
    return verdict


# -- suites and reports ---------------------------------------------------------------

@dataclass
class SuiteReport:
    claims: list[str]
    bounds: Bounds
    verdicts: list[Verdict]

    @property
    def ok(self) -> bool:
        return not any(v.failed for v in self.verdicts)

    def to_dict(self, timings: bool = False) -> dict:
        b = self.bounds
        return {
            "claims": self.claims,
            "bounds": {"max_n": b.max_n, "max_map_size": b.max_map_size,
                       "max_pair_size": b.max_pair_size, "lenient_def21": b.lenient_def21},
            "ok": self.ok,
            "forced_failures": [v.claim for v in self.verdicts if v.failed],
            "verdicts": [v.to_dict(timings) for v in self.verdicts],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        d = json.loads(text)
        b = d["bounds"]
        bounds = Bounds(b["max_n"], b["max_map_size"], b["max_pair_size"], b["lenient_def21"])
        return cls(d["claims"], bounds, [Verdict.from_dict(v) for v in d["verdicts"]])

    def to_table(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "domain", "domain_size", "instances", "violations",
                    "witness"])
        for v in self.verdicts:
            w.writerow([v.claim, v.status, v.domain, v.domain_size, v.instances, v.violations,
                        witness_summary(v.witness) if v.witness else ""])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for v in self.verdicts:
            mark = "ok" if v.violations == 0 else ("FAIL" if v.failed else "refuted")
            lines.append(f"{v.claim:8s} {v.status:12s} {mark:8s} instances={v.instances} "
                         f"violations={v.violations}")
            if v.truth_table:
                cells = " ".join(f"{k}:{n}" for k, n in sorted(v.truth_table.items()))
                lines.append(f"         truth table {cells}")
            if v.witness:
                lines.append("         witness " + witness_summary(v.witness))
        lines.append("suite ok" if self.ok else "suite FAILED (forced claim violated)")
        return "\n".join(lines) + "\n"


def _fmt_space(doc: dict) -> str:
    opens = ",".join("{" + "".join(o) + "}" for o in doc["opens"])
    return f"X={''.join(doc['points'])} tau=[{opens}]"


def witness_summary(w: WitnessRecord) -> str:
    parts = [_fmt_space(s) for s in w.spaces]
    for m in w.maps:
        parts.append("map " + " ".join(f"{a}->{b}" for a, b in m))
    if w.subset is not None:
        parts.append("A={" + ",".join(w.subset) + "}")
    if w.failed:
        parts.append(f"failed: {w.failed}")
    return "; ".join(parts)


def run_suite(suite: str | Sequence[str], bounds: Bounds | None = None, workers: int = 1
              ) -> SuiteReport:
    ids = resolve_suite(suite)
    bounds = bounds or Bounds()
    return SuiteReport(ids, bounds, [run_claim(CLAIMS[c], bounds, workers) for c in ids])


# -- miner --------------------------------------------------------------------------

# target -> (domain, predicate that must hold, predicate that must fail)
MINE_TARGETS = {
    "g-normal-not-normal": ("spaces", "g_normal", "normal"),
    "scstar-normal-not-g-normal": ("spaces", "scstar_normal", "g_normal"),
    "gscstar-closed-not-scstar-closed": ("subsets", "gscstar_closed", "scstar_closed"),
    "scstar-gscstar-continuous-not-scstar-irresolute":
        ("maps", "scstar_gscstar_continuous", "scstar_irresolute"),
    "scstar-closed-not-closed": ("subsets", "scstar_closed", "closed"),
    "g-closed-not-closed": ("subsets", "g_closed", "closed"),
}


def mine(target: str, bounds: Bounds | None = None, space: FiniteSpace | None = None,
         limit: int | None = None) -> list[WitnessRecord]:
    """All instances with property ``yes`` but not ``no`` for the target, in canonical order.

    With ``space`` given, subset and space targets look only at that space.
    An empty list means "not found within bounds", nothing more.
    """
    if target not in MINE_TARGETS:
        raise UnknownClaim(f"unknown mining target {target!r}; expected one of "
                           + ", ".join(MINE_TARGETS))
    domain, yes, no = MINE_TARGETS[target]
    bounds = bounds or Bounds()
    lenient = bounds.lenient_def21
    out: list[WitnessRecord] = []

    def emit(spaces, maps, subset, vals):
        out.append(WitnessRecord(
            claim=target, domain=domain, spaces=[space_to_document(s) for s in spaces],
            maps=[_map_pairs_doc(m) for m in maps],
            subset=spaces[0].ground.names(subset) if subset is not None else None,
            failed=f"not {no}", values={yes: bool(vals[yes]), no: bool(vals[no])}))
        return limit is not None and len(out) >= limit

    if domain == "subsets":
        pool: Iterable[FiniteSpace] = [space] if space is not None else (
            s for n in range(1, bounds.max_n + 1) for s in topologies(n))
        for s in pool:
            vals = subset_values(s)
            for a in range(1 << s.n):
                if vals[yes][a] and not vals[no][a]:
                    if emit([s], [], a, {yes: True, no: False}):
                        return out
    elif domain == "spaces":
        pool = [space] if space is not None else (
            s for n in range(1, bounds.max_n + 1) for s in topologies(n))
        for s in pool:
            vals = space_values(s, lenient)
            if vals[yes] and not vals[no]:
                if emit([s], [], None, vals):
                    return out
    else:
        _check_budget("maps", bounds)
        sizes = range(1, bounds.max_map_size + 1)
        for nx, ny in product(sizes, sizes):
            tab = map_table(nx, ny)
            hit = tab[yes] & ~tab[no]
            X, Y, tbls = topologies(nx), topologies(ny), list(tables(nx, ny))
            for ix, iy, it in np.argwhere(hit).tolist():
                f = SpaceMap(X[ix], Y[iy], tbls[it])
                if emit([f.domain, f.codomain], [f], None, {yes: True, no: False}):
                    return out
    return out
