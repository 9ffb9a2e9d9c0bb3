"""Ground sets, subset masks and finite topologies.

Subsets of an ``n``-point ground set are plain ``int`` bit masks: bit ``i`` is
set iff point ``i`` belongs to the subset. All semantics work on indices; the
labels only matter for parsing and printing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 16


class SpaceFormatError(ValueError):
    """Malformed space document. Carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class TopologyError(ValueError):
    """A family of sets that is not a topology."""

    def __init__(self, violation: "Violation", message: str):
        self.violation = violation
        super().__init__(message)


@dataclass(frozen=True)
class Violation:
    """First failure of the topology axioms.

    ``kind`` is ``"empty"``, ``"whole"``, ``"union"`` or ``"intersection"``; for
    the last two, ``pair`` holds the two members whose union/intersection is
    missing from the family.
    """

    kind: str
    pair: tuple[int, int] | None = None
    missing: int | None = None


# -- subset algebra -----------------------------------------------------------

def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(a: int, n: int) -> int:
    return ~a & ((1 << n) - 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def members(a: int) -> Iterator[int]:
    """Point indices of ``a`` in ascending order."""
    i = 0
    while a:
        if a & 1:
            yield i
        a >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def submasks(a: int) -> Iterator[int]:
    """All subsets of ``a``, ascending numeric order."""
    # enumerate in descending order via the standard trick, then reverse
    out = []
    s = a
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & a
    return reversed(out)


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        if not 1 <= len(self.labels) <= MAX_POINTS:
            raise ValueError(f"ground set must have 1..{MAX_POINTS} points, got {len(self.labels)}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate point labels in {self.labels!r}")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        return cls(tuple(default_labels(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown point label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(lab) for lab in labels)

    def names(self, a: int) -> list[str]:
        return [self.labels[i] for i in members(a)]

    def format(self, a: int) -> str:
        return "{" + ",".join(self.names(a)) + "}"


def default_labels(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"p{i}" for i in range(n)]


def validate_topology(family: Iterable[int], n: int) -> Violation | None:
    """Return ``None`` if ``family`` is a topology on ``n`` points, else the first violation.

    Pairs are scanned in ascending mask order, union checked before intersection.
    """
    fam = sorted(set(family))
    present = set(fam)
    top = full_mask(n)
    if 0 not in present:
        return Violation("empty", missing=0)
    if top not in present:
        return Violation("whole", missing=top)
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            if a | b not in present:
                return Violation("union", (a, b), a | b)
            if a & b not in present:
                return Violation("intersection", (a, b), a & b)
    return None


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    """A finite topological space given by its full family of open sets."""

    ground: GroundSet
    opens: tuple[int, ...]
    _open_set: frozenset = field(init=False, repr=False)

    def __init__(self, ground: GroundSet, opens: Iterable[int], *, check: bool = True):
        fam = tuple(sorted(set(opens)))
        n = ground.size
        if check:
            if any(m >> n for m in fam):
                raise ValueError("open set has bits outside the ground set")
            v = validate_topology(fam, n)
            if v is not None:
                raise TopologyError(v, describe_violation(v, ground))
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "opens", fam)
        object.__setattr__(self, "_open_set", frozenset(fam))

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[int], labels: Sequence[str] | None = None,
                   check: bool = True) -> "FiniteSpace":
        ground = GroundSet(tuple(labels)) if labels is not None else GroundSet.of_size(n)
        return cls(ground, opens, check=check)

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls.from_opens(n, range(1 << n), check=False)

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls.from_opens(n, (0, full_mask(n)), check=False)

    @property
    def n(self) -> int:
        return self.ground.size

    @property
    def full(self) -> int:
        return (1 << self.ground.size) - 1

    def is_open(self, a: int) -> bool:
        return a in self._open_set

    def is_closed(self, a: int) -> bool:
        return (~a & self.full) in self._open_set

    @property
    def closeds(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full & ~u for u in self.opens))

    def interior(self, a: int) -> int:
        r = 0
        for u in self.opens:
            if u & ~a == 0:
                r |= u
        return r

    def closure(self, a: int) -> int:
        full = self.full
        return full & ~self.interior(full & ~a)

    def mask(self, labels: Iterable[str]) -> int:
        return self.ground.mask(labels)

    def format(self, a: int) -> str:
        return self.ground.format(a)

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.ground == other.ground and self.opens == other.opens

    def __hash__(self):
        return hash((self.ground, self.opens))

    def __repr__(self):
        fam = ", ".join(self.format(u) for u in self.opens)
        return f"FiniteSpace(points={list(self.ground.labels)}, opens=[{fam}])"


def interior(space: FiniteSpace, a: int) -> int:
    """Largest open subset of ``a``."""
    return space.interior(a)


def closure(space: FiniteSpace, a: int) -> int:
    """Smallest closed superset of ``a``."""
    return space.closure(a)


def describe_violation(v: Violation, ground: GroundSet) -> str:
    if v.kind == "empty":
        return "topology must contain the empty set"
    if v.kind == "whole":
        return "topology must contain the whole ground set"
    a, b = v.pair
    op = "union" if v.kind == "union" else "intersection"
    return (f"not a topology: {op} {ground.format(v.missing)} of "
            f"{ground.format(a)} and {ground.format(b)} is missing")


# -- text / structured formats ------------------------------------------------

def _parse_labels(rest: str, lineno: int, col0: int, ground: GroundSet) -> int:
    text = rest.strip()
    if text == "*":
        return full_mask(ground.size)
    m = 0
    pos = 0
    for tok in text.replace(",", " ").split():
        pos = rest.find(tok, pos)
        try:
            i = ground.index(tok)
        except KeyError:
            raise SpaceFormatError(f"unknown point label {tok!r}", lineno, col0 + pos + 1) from None
        m |= 1 << i
        pos += len(tok)
    return m


def parse_space(text: str) -> FiniteSpace:
    """Parse a space document (line format or JSON) into a validated space."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpaceFormatError(exc.msg, exc.lineno, exc.colno) from None
        return space_from_document(doc)

    ground = None
    opens: list[int] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            col = len(line) - len(line.lstrip()) + 1
            raise SpaceFormatError("expected 'points:' or 'open:'", lineno, col)
        key = key.strip()
        col0 = len(key) + 1 + (len(line) - len(line.lstrip()))
        if key == "points":
            if ground is not None:
                raise SpaceFormatError("duplicate 'points:' line", lineno, 1)
            labels = rest.replace(",", " ").split()
            try:
                ground = GroundSet(tuple(labels))
            except ValueError as exc:
                raise SpaceFormatError(str(exc), lineno, col0 + 1) from None
        elif key == "open":
            if ground is None:
                raise SpaceFormatError("'open:' before 'points:'", lineno, 1)
            m = _parse_labels(rest, lineno, col0, ground)
            if m in seen:
                raise SpaceFormatError(
                    f"duplicate open set {ground.format(m)} (first on line {seen[m]})", lineno, 1)
            seen[m] = lineno
            opens.append(m)
        else:
            raise SpaceFormatError(f"unknown key {key!r}", lineno, 1)
    if ground is None:
        raise SpaceFormatError("missing 'points:' line", 1, 1)
    return FiniteSpace(ground, opens)


def space_from_document(doc: dict) -> FiniteSpace:
    if not isinstance(doc, dict) or "points" not in doc or "opens" not in doc:
        raise SpaceFormatError("structured space needs 'points' and 'opens' fields")
    try:
        ground = GroundSet(tuple(str(p) for p in doc["points"]))
    except ValueError as exc:
        raise SpaceFormatError(str(exc)) from None
    opens = []
    for entry in doc["opens"]:
        if entry == "*":
            m = full_mask(ground.size)
        else:
            try:
                m = ground.mask(entry)
            except KeyError as exc:
                raise SpaceFormatError(exc.args[0]) from None
        if m in opens:
            raise SpaceFormatError(f"duplicate open set {ground.format(m)}")
        opens.append(m)
    return FiniteSpace(ground, opens)


def space_to_document(space: FiniteSpace) -> dict:
    return {"points": list(space.ground.labels),
            "opens": [space.ground.names(u) for u in space.opens]}


def serialize(space: FiniteSpace, structured: bool = False) -> str:
    if structured:
        return json.dumps(space_to_document(space)) + "\n"
    lines = ["points: " + " ".join(space.ground.labels)]
    for u in space.opens:
        lines.append(("open: " + " ".join(space.ground.names(u))).rstrip())
    return "\n".join(lines) + "\n"


def load_space(path) -> FiniteSpace:
    with open(path, encoding="utf-8") as fh:
        return parse_space(fh.read())
