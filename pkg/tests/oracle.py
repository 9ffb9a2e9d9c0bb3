"""Definition-literal reference implementation, independent of ``fintopo``.

Sets are frozensets of point indices. Nothing is cached and every quantifier
is evaluated in full (no early exit), so this is slow but easy to audit.
"""

from __future__ import annotations

from itertools import combinations


def powerset(points):
    pts = sorted(points)
    out = []
    for k in range(len(pts) + 1):
        out.extend(frozenset(c) for c in combinations(pts, k))
    return out


class NaiveSpace:
    def __init__(self, n, opens):
        self.n = n
        self.X = frozenset(range(n))
        self.opens = [frozenset(o) for o in opens]
        self.subsets = powerset(self.X)
        self.closeds = [self.X - o for o in self.opens]

    def interior(self, a):
        acc = frozenset()
        for o in self.opens:
            if o <= a:
                acc = acc | o
        return acc

    def closure(self, a):
        acc = self.X
        for c in self.closeds:
            if a <= c:
                acc = acc & c
        return acc

    # -- basic classes ---------------------------------------------------------
    def is_open(self, a):
        return a in self.opens

    def is_closed(self, a):
        return a in self.closeds

    def is_regular_open(self, a):
        return a == self.interior(self.closure(a))

    def is_semi_open(self, a):
        return a <= self.closure(self.interior(a))

    def is_cstar_open(self, a):
        return self.interior(self.closure(a)) <= a and a <= self.closure(self.interior(a))

    def _meet_of(self, pred, a):
        acc = self.X
        for s in self.subsets:
            if a <= s and pred(s):
                acc = acc & s
        return acc

    def semi_closure(self, a):
        return self._meet_of(lambda s: self.is_semi_open(self.X - s), a)

    def cstar_closure(self, a):
        return self._meet_of(lambda s: self.is_cstar_open(self.X - s), a)

    def is_scstar_closed(self, a):
        scl = self.semi_closure(a)
        verdicts = [scl <= u for u in self.subsets if a <= u and self.is_cstar_open(u)]
        return all(verdicts)

    def scstar_closure(self, a):
        return self._meet_of(self.is_scstar_closed, a)

    def _interior_of(self, pred, a):
        acc = frozenset()
        for s in self.subsets:
            if s <= a and pred(s):
                acc = acc | s
        return acc

    def semi_interior(self, a):
        return self._interior_of(self.is_semi_open, a)

    def cstar_interior(self, a):
        return self._interior_of(self.is_cstar_open, a)

    def scstar_interior(self, a):
        return self._interior_of(lambda s: self.is_scstar_closed(self.X - s), a)

    def is_g_closed(self, a):
        cl = self.closure(a)
        verdicts = [cl <= u for u in self.opens if a <= u]
        return all(verdicts)

    def is_gscstar_closed(self, a):
        sccl = self.scstar_closure(a)
        verdicts = [sccl <= u for u in self.opens if a <= u]
        return all(verdicts)

    def is_scstar_g_closed(self, a):
        sccl = self.scstar_closure(a)
        verdicts = [sccl <= u for u in self.subsets
                    if a <= u and self.is_scstar_closed(self.X - u)]
        return all(verdicts)

    def classify(self, a):
        c = self.X - a
        return {
            "open": self.is_open(a),
            "closed": self.is_closed(a),
            "regular_open": self.is_regular_open(a),
            "regular_closed": self.is_regular_open(c),
            "semi_open": self.is_semi_open(a),
            "semi_closed": self.is_semi_open(c),
            "cstar_open": self.is_cstar_open(a),
            "cstar_closed": self.is_cstar_open(c),
            "scstar_open": self.is_scstar_closed(c),
            "scstar_closed": self.is_scstar_closed(a),
            "g_open": self.is_g_closed(c),
            "g_closed": self.is_g_closed(a),
            "gscstar_open": self.is_gscstar_closed(c),
            "gscstar_closed": self.is_gscstar_closed(a),
            "scstar_g_open": self.is_scstar_g_closed(c),
            "scstar_g_closed": self.is_scstar_g_closed(a),
        }

    def closures(self, a):
        return {"semi": self.semi_closure(a), "cstar": self.cstar_closure(a),
                "scstar": self.scstar_closure(a)}

    def interiors(self, a):
        return {"semi": self.semi_interior(a), "cstar": self.cstar_interior(a),
                "scstar": self.scstar_interior(a)}

    # -- normality -------------------------------------------------------------
    def normal_like(self, is_member, disjoint=True):
        fam = [s for s in self.subsets if is_member(s)]
        results = []
        for a in self.closeds:
            for b in self.closeds:
                if a & b:
                    continue
                found = [(u, v) for u in fam for v in fam
                         if a <= u and b <= v and (not disjoint or not (u & v))]
                results.append(bool(found))
        return all(results)


def from_space(space) -> NaiveSpace:
    """Convert a ``fintopo`` space through its public label interface only."""
    labels = list(space.ground.labels)
    opens = []
    for o in space.opens:
        names = space.ground.names(o)
        opens.append({labels.index(x) for x in names})
    return NaiveSpace(len(labels), opens)


def to_mask(s) -> int:
    return sum(1 << i for i in s)


def from_mask(m: int) -> frozenset:
    return frozenset(i for i in range(m.bit_length()) if m >> i & 1)


# -- maps --------------------------------------------------------------------------

class NaiveMap:
    def __init__(self, dom: NaiveSpace, cod: NaiveSpace, table):
        self.X, self.Y, self.t = dom, cod, list(table)

    def image(self, a):
        return frozenset(self.t[x] for x in a)

    def preimage(self, b):
        return frozenset(x for x in self.X.X if self.t[x] in b)

    def _images(self, src, dst):
        checks = [dst(self.image(a)) for a in self.X.subsets if src(a)]
        return all(checks)

    def _preimages(self, src, dst):
        checks = [dst(self.preimage(b)) for b in self.Y.subsets if src(b)]
        return all(checks)

    def scstar_nbd(self, space, x, n):
        return any(x in w and w <= n for w in space.subsets
                   if space.is_scstar_closed(space.X - w))

    def profile(self):
        X, Y = self.X, self.Y
        cls = {}
        for name, sp in (("X", X), ("Y", Y)):
            c = {a: sp.classify(a) for a in sp.subsets}
            cls[name] = lambda key, c=c: (lambda a: c[a][key])
        x, y = cls["X"], cls["Y"]
        surj = self.image(X.X) == Y.X
        inj = len(set(self.t)) == len(self.t)
        almost = all(
            self.scstar_nbd(X, p, X.scstar_closure(self.preimage(v)))
            for p in X.X for v in Y.subsets if self.scstar_nbd(Y, self.t[p], v))
        return {
            "continuous": self._preimages(y("open"), x("open")),
            "open_map": self._images(x("open"), y("open")),
            "closed_map": self._images(x("closed"), y("closed")),
            "surjective": surj,
            "injective": inj,
            "bijective": surj and inj,
            "r_map": self._preimages(y("regular_open"), x("regular_open")),
            "completely_continuous": self._preimages(y("open"), x("regular_open")),
            "rc_continuous": self._preimages(y("regular_closed"), x("regular_closed")),
            "strongly_scstar_open": self._images(x("scstar_open"), y("scstar_open")),
            "strongly_scstar_closed": self._images(x("scstar_closed"), y("scstar_closed")),
            "almost_scstar_irresolute": almost,
            "scstar_closed_map": self._images(x("closed"), y("scstar_closed")),
            "scstar_g_closed_map": self._images(x("closed"), y("scstar_g_closed")),
            "gscstar_closed_map": self._images(x("closed"), y("gscstar_closed")),
            "quasi_scstar_closed": self._images(x("scstar_closed"), y("closed")),
            "scstar_scstar_g_closed": self._images(x("scstar_closed"), y("scstar_g_closed")),
            "scstar_gscstar_closed": self._images(x("scstar_closed"), y("gscstar_closed")),
            "almost_gscstar_closed": self._images(x("regular_closed"), y("gscstar_closed")),
            "scstar_gscstar_continuous": self._preimages(y("scstar_closed"), x("gscstar_closed")),
            "scstar_irresolute": self._preimages(y("scstar_open"), x("scstar_open")),
        }
