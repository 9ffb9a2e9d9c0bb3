"""Exhaustive generation of labeled finite topologies and of maps between them.

Topologies on ``n`` points are in bijection with preorders (reflexive,
transitive relations) on ``n`` points: the open sets are exactly the up-sets
of the specialization preorder. Preorders are grown one point at a time; a new
point ``p`` is attached by choosing the down-set ``D = {x : x <= p}`` and the
up-set ``U = {y : p <= y}``, subject to ``x <= y`` for all ``x in D, y in U``.
Every preorder arises from exactly one such sequence of choices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .core import FiniteSpace, GroundSet, full_mask, validate_topology
from .maps import SpaceMap, map_profile
from .operators import BudgetExceeded

MAX_N = 6
HARD_MAX_N = 7
# published labeled-topology counts (OEIS A000798); cost estimates only
KNOWN_COUNTS = (1, 1, 4, 29, 355, 6942, 209527, 9535241)


def _upsets(up: tuple[int, ...]) -> list[int]:
    """All up-sets of the preorder, i.e. all unions of principal up-sets."""
    fam = {0}
    for m in up:
        fam |= {o | m for o in fam}
    return sorted(fam)


def _downsets(up: tuple[int, ...]) -> list[int]:
    n = len(up)
    full = full_mask(n)
    return sorted(full & ~u for u in _upsets(up))


def preorders(n: int) -> Iterator[tuple[int, ...]]:
    """Preorders on ``n`` points as principal up-set masks ``up[x] = {y : x <= y}``."""
    if n == 0:
        yield ()
        return
    for up in preorders(n - 1):
        p = n - 1
        bit = 1 << p
        downs = _downsets(up) if up else [0]
        ups = _upsets(up) if up else [0]
        for d in downs:
            # every y in U must lie above every x in D
            allowed = full_mask(n - 1)
            for x in range(n - 1):
                if d >> x & 1:
                    allowed &= up[x]
            for u in ups:
                if u & ~allowed:
                    continue
                new = tuple((ux | (bit | u if d >> x & 1 else 0)) for x, ux in enumerate(up))
                yield new + (bit | u,)


def opens_of_preorder(up: tuple[int, ...]) -> list[int]:
    return _upsets(up)


def specialization(space: FiniteSpace) -> tuple[int, ...]:
    """``up[x]``: the smallest open set containing ``x``."""
    full = space.full
    out = []
    for x in range(space.n):
        m = full
        for u in space.opens:
            if u >> x & 1:
                m &= u
        out.append(m)
    return tuple(out)


def _relation_code(up: tuple[int, ...], perm: tuple[int, ...]) -> int:
    n = len(up)
    moved = [0] * n
    for x, ux in enumerate(up):
        m = 0
        for y in range(n):
            if ux >> y & 1:
                m |= 1 << perm[y]
        moved[perm[x]] = m
    code = 0
    for m in moved:
        code = (code << n) | m
    return code


def _check_n(n: int, allow_seven: bool = False) -> None:
    cap = HARD_MAX_N if allow_seven else MAX_N
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in 1..{cap}, got {n}")


def enumerate_topologies(n: int, up_to_homeo: bool = False,
                         allow_seven: bool = False) -> Iterator[FiniteSpace]:
    """Every labeled topology on ``n`` points exactly once, in a fixed order.

    With ``up_to_homeo`` only the member of each relabeling orbit whose relation
    code is minimal over all point permutations is yielded.
    """
    _check_n(n, allow_seven)
    ground = GroundSet.of_size(n)
    perms = list(permutations(range(n))) if up_to_homeo else None
    identity = tuple(range(n))
    for up in preorders(n):
        if perms is not None:
            own = _relation_code(up, identity)
            if any(_relation_code(up, p) < own for p in perms):
                continue
        yield FiniteSpace(ground, opens_of_preorder(up), check=False)


def count_topologies(n: int, up_to_homeo: bool = False, allow_seven: bool = False) -> int:
    return sum(1 for _ in enumerate_topologies(n, up_to_homeo, allow_seven))


@lru_cache(maxsize=None)
def topologies(n: int) -> tuple[FiniteSpace, ...]:
    """Cached list of :func:`enumerate_topologies` output."""
    return tuple(enumerate_topologies(n))


def naive_topologies(n: int) -> Iterator[FiniteSpace]:
    """Brute-force reference: filter every family containing the empty set and
    the whole set through :func:`validate_topology`. Feasible for ``n <= 4``."""
    if not 1 <= n <= 4:
        raise ValueError("naive topology filter is limited to n <= 4")
    full = full_mask(n)
    middle = list(range(1, full))
    ground = GroundSet.of_size(n)
    for bits in range(1 << len(middle)):
        fam = [0, full] + [m for k, m in enumerate(middle) if bits >> k & 1]
        if validate_topology(fam, n) is None:
            yield FiniteSpace(ground, fam, check=False)


# -- maps -------------------------------------------------------------------------

MAP_BUDGET = 1_000_000


def table_index(table, ny: int) -> int:
    idx = 0
    for t in table:
        idx = idx * ny + t
    return idx


def tables(nx: int, ny: int) -> Iterator[tuple[int, ...]]:
    """All ``ny**nx`` tables in lexicographic order."""
    return product(range(ny), repeat=nx)


def enumerate_maps(x: FiniteSpace, y: FiniteSpace, constraints=(), budget: int = MAP_BUDGET
                   ) -> Iterator[SpaceMap]:
    """All maps ``x -> y`` in lexicographic table order, optionally filtered.

    ``constraints`` names flags of :class:`~fintopo.maps.MapClassification`
    (``"surjective"``, ``"continuous"``, ...) that every yielded map must have.
    """
    total = y.n ** x.n
    if total > budget:
        raise BudgetExceeded(f"refusing to enumerate {total} maps (budget {budget})")
    constraints = tuple(constraints)
    for t in tables(x.n, y.n):
        f = SpaceMap(x, y, t)
        if constraints:
            prof = map_profile(f)
            if not all(getattr(prof, c) for c in constraints):
                continue
        yield f


def compose_index_table(nx: int, ny: int, nz: int) -> list[list[int]]:
    """``comp[i][j]``: index of ``g ∘ f`` where ``f`` is table ``i`` (nx->ny) and
    ``g`` is table ``j`` (ny->nz)."""
    fs = list(tables(nx, ny))
    gs = list(tables(ny, nz))
    return [[table_index((g[t] for t in f), nz) for g in gs] for f in fs]


__all__ = [
    "preorders", "enumerate_topologies", "count_topologies", "topologies", "naive_topologies",
    "specialization", "enumerate_maps", "tables", "table_index", "compose_index_table",
    "KNOWN_COUNTS", "MAX_N",
]
