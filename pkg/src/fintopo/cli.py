"""Command-line front end.

Exit status: 0 success, 1 input error, 2 forced-claim violation, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import claims as C
from .core import SpaceFormatError, TopologyError, load_space, space_to_document
from .enumeration import count_topologies, enumerate_topologies, naive_topologies
from .maps import MapError, characterization_audit, load_map, map_profile
from .operators import (BudgetExceeded, ClosureKind, SetClass, classify_subset, family,
                        gen_closure, gen_interior, scstar_closure_is_closed)
from .separation import separation_profile

EXIT_OK, EXIT_INPUT, EXIT_FORCED, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_format(p):
    p.add_argument("--format", choices=("text", "structured", "tabular"), default="text")


def _add_bounds(p):
    p.add_argument("--max-n", type=int, default=4, help="largest space size for space claims")
    p.add_argument("--max-map-size", type=int, default=3, help="largest space size for map claims")
    p.add_argument("--max-pair-size", type=int, default=None,
                   help="largest space size for composition claims (default: --max-map-size)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes for map tables (default: available CPUs)")
    p.add_argument("--lenient-def21", action="store_true",
                   help="do not require the separating sets to be disjoint")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fintopo", description="finite topology workbench")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check the topology axioms of a space file")
    p.add_argument("--space", required=True)
    _add_format(p)

    p = sub.add_parser("classify", help="classify a subset, or list a set class")
    p.add_argument("--space", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--subset")
    g.add_argument("--class", dest="cls")
    _add_format(p)

    p = sub.add_parser("closure", help="all interior/closure operators of a subset")
    p.add_argument("--space", required=True)
    p.add_argument("--subset", required=True)
    _add_format(p)

    p = sub.add_parser("profile", help="separation profile of a space")
    p.add_argument("--space", required=True)
    p.add_argument("--lenient-def21", action="store_true")
    _add_format(p)

    p = sub.add_parser("map-audit", help="function classes and characterization audit of a map")
    p.add_argument("--map", required=True)
    _add_format(p)

    p = sub.add_parser("enumerate", help="count or list labeled topologies")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--up-to-homeo", action="store_true")
    p.add_argument("--list", action="store_true", help="print every space, not just counts")
    p.add_argument("--check", action="store_true",
                   help="cross-check against the naive family filter (n <= 4)")
    _add_format(p)

    p = sub.add_parser("verify", help="run a claim suite exhaustively")
    p.add_argument("--suite", default="forced", help="suite name or comma-separated claim ids")
    _add_bounds(p)
    p.add_argument("--timings", action="store_true", help="include wall times in reports")
    _add_format(p)

    p = sub.add_parser("mine", help="search for converse counterexamples")
    p.add_argument("--target", required=True, choices=sorted(C.MINE_TARGETS))
    p.add_argument("--space", help="restrict subset/space targets to this space")
    p.add_argument("--limit", type=int, default=None)
    _add_bounds(p)
    _add_format(p)
    return ap


# -- helpers --------------------------------------------------------------------

def _space(path):
    try:
        return load_space(path)
    except (SpaceFormatError, TopologyError) as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _subset(space, text, path="--subset"):
    labels = [t for t in text.replace(",", " ").split() if t]
    try:
        return space.mask(labels)
    except KeyError as exc:
        raise InputError(f"{path}: {exc.args[0]}") from None


def _bounds(args) -> C.Bounds:
    pair = args.max_pair_size if args.max_pair_size is not None else args.max_map_size
    try:
        return C.Bounds(args.max_n, args.max_map_size, pair, args.lenient_def21)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _rows_to_table(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _setstr(names) -> str:
    return "{" + ",".join(names) + "}"


# -- commands -------------------------------------------------------------------

def cmd_validate(args, out):
    try:
        space = load_space(args.space)
    except TopologyError as exc:
        doc = {"space": args.space, "valid": False, "violation": str(exc)}
        status = EXIT_INPUT
    except (SpaceFormatError, OSError) as exc:
        raise InputError(f"{args.space}: {exc}") from None
    else:
        doc = {"space": args.space, "valid": True, "points": list(space.ground.labels),
               "opens": len(space.opens)}
        status = EXIT_OK
    if args.format == "structured":
        out.write(_dump(doc))
    elif args.format == "tabular":
        out.write(_rows_to_table(list(doc), [list(doc.values())]))
    elif doc["valid"]:
        out.write(f"{args.space}: valid topology on {len(space.ground.labels)} points, "
                  f"{len(space.opens)} open sets\n")
    else:
        out.write(f"{args.space}: invalid: {doc['violation']}\n")
    return status


def cmd_classify(args, out):
    space = _space(args.space)
    names = space.ground.names
    if args.subset is not None:
        a = _subset(space, args.subset)
        flags = classify_subset(space, a).as_dict()
        if args.format == "structured":
            out.write(_dump({"subset": names(a), "classification": flags}))
        elif args.format == "tabular":
            out.write(_rows_to_table(["class", "member"], [[k, v] for k, v in flags.items()]))
        else:
            out.write(f"A = {_setstr(names(a))}\n")
            for k, v in flags.items():
                out.write(f"  {k:16s} {'yes' if v else 'no'}\n")
        return EXIT_OK
    try:
        cls = SetClass.parse(args.cls)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    fam = [names(m) for m in family(space, cls)]
    if args.format == "structured":
        out.write(_dump({"class": cls.value, "family": fam}))
    elif args.format == "tabular":
        out.write(_rows_to_table(["subset"], [[_setstr(s)] for s in fam]))
    else:
        for s in fam:
            out.write(_setstr(s) + "\n")
    return EXIT_OK


def cmd_closure(args, out):
    space = _space(args.space)
    a = _subset(space, args.subset)
    ops = {
        "int": space.interior(a),
        "cl": space.closure(a),
        "s-int": gen_interior(space, a, ClosureKind.SEMI),
        "scl": gen_closure(space, a, ClosureKind.SEMI),
        "c*-int": gen_interior(space, a, ClosureKind.CSTAR),
        "c*-cl": gen_closure(space, a, ClosureKind.CSTAR),
        "SC*-int": gen_interior(space, a, ClosureKind.SCSTAR),
        "SC*-cl": gen_closure(space, a, ClosureKind.SCSTAR),
    }
    named = {k: space.ground.names(v) for k, v in ops.items()}
    sc_ok = scstar_closure_is_closed(space, a)
    if args.format == "structured":
        out.write(_dump({"subset": space.ground.names(a), "operators": named,
                         "scstar_closure_is_scstar_closed": sc_ok}))
    elif args.format == "tabular":
        out.write(_rows_to_table(["operator", "value"], [[k, _setstr(v)] for k, v in named.items()]))
    else:
        out.write(f"A = {_setstr(space.ground.names(a))}\n")
        for k, v in named.items():
            out.write(f"  {k:8s} {_setstr(v)}\n")
        if not sc_ok:
            out.write("  note: SC*-cl(A) is not itself SC*-closed\n")
    return EXIT_OK


def cmd_profile(args, out):
    space = _space(args.space)
    flat = separation_profile(space, args.lenient_def21).flat()
    if args.format == "structured":
        out.write(_dump(flat))
    elif args.format == "tabular":
        out.write(_rows_to_table(["property", "value"], [[k, v] for k, v in flat.items()]))
    else:
        for k, v in flat.items():
            out.write(f"{k.replace('_', '-')}={str(v).lower()}\n")
    return EXIT_OK


def cmd_map_audit(args, out):
    try:
        f = load_map(args.map)
    except (SpaceFormatError, TopologyError, MapError, KeyError) as exc:
        raise InputError(f"{args.map}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{args.map}: {exc.strerror}") from None
    prof = map_profile(f)
    audit = characterization_audit(f, prof)
    audit_doc = {k: {"left": e.left, "right": e.right, "left_value": e.left_value,
                     "right_value": e.right_value, "holds": e.holds}
                 for k, e in audit.items()}
    if args.format == "structured":
        out.write(_dump({"profile": prof.as_dict(), "audit": audit_doc}))
    elif args.format == "tabular":
        rows = [["profile", k, v] for k, v in prof.as_dict().items()]
        rows += [["audit", k, e.holds] for k, e in audit.items()]
        out.write(_rows_to_table(["section", "name", "value"], rows))
    else:
        for k, v in prof.as_dict().items():
            out.write(f"{k:26s} {'yes' if v else 'no'}\n")
        out.write("characterizations:\n")
        for k, e in audit.items():
            rel = "=>" if e.directional else "<=>"
            out.write(f"  {k:6s} {e.left}={e.left_value} {rel} {e.right}={e.right_value}: "
                      f"{'holds' if e.holds else 'FAILS'}\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    if not 1 <= args.max_n <= 6:
        raise InputError("--max-n must be in 1..6")
    rows = []
    spaces = []
    for n in range(1, args.max_n + 1):
        if args.list:
            sp = list(enumerate_topologies(n, args.up_to_homeo))
            spaces.extend(sp)
            count = len(sp)
        else:
            count = count_topologies(n, args.up_to_homeo)
        row = {"n": n, "count": count}
        if args.check:
            if n > 4:
                raise InputError("--check is limited to n <= 4")
            mine = {s.opens for s in enumerate_topologies(n)}
            naive = {s.opens for s in naive_topologies(n)}
            row["naive_agrees"] = mine == naive
        rows.append(row)
    ok = all(r.get("naive_agrees", True) for r in rows)
    if args.format == "structured":
        doc = {"up_to_homeo": args.up_to_homeo, "counts": rows}
        if args.list:
            doc["spaces"] = [space_to_document(s) for s in spaces]
        out.write(_dump(doc))
    elif args.format == "tabular":
        out.write(_rows_to_table(list(rows[0]), [list(r.values()) for r in rows]))
    else:
        for s in spaces:
            out.write(" ".join(_setstr(o) for o in space_to_document(s)["opens"]) + "\n")
        for r in rows:
            extra = "" if "naive_agrees" not in r else (
                "  (naive filter agrees)" if r["naive_agrees"] else "  (naive filter DISAGREES)")
            out.write(f"n={r['n']}: {r['count']}{extra}\n")
    return EXIT_OK if ok else EXIT_INPUT


def _workers(args) -> int:
    return args.workers if args.workers else C.default_workers()


def cmd_verify(args, out, err):
    try:
        ids = C.resolve_suite(args.suite)
    except C.UnknownClaim as exc:
        raise InputError(exc.args[0]) from None
    bounds = _bounds(args)
    domains = sorted({C.CLAIMS[i].domain for i in ids})
    est = ", ".join(f"{d}={C.estimate(d, bounds)}" for d in domains)
    err.write(f"cost estimate (instances per domain): {est or 'none'}\n")
    report = C.run_suite(ids, bounds, _workers(args))
    if args.format == "structured":
        out.write(report.to_json(args.timings))
    elif args.format == "tabular":
        out.write(report.to_table())
    else:
        out.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FORCED


def cmd_mine(args, out, err):
    bounds = _bounds(args)
    space = _space(args.space) if args.space else None
    domain = C.MINE_TARGETS[args.target][0]
    if space is None or domain == "maps":
        err.write(f"cost estimate: {domain}={C.estimate(domain, bounds)} instances\n")
    found = C.mine(args.target, bounds, space, args.limit)
    if args.format == "structured":
        out.write(_dump({"target": args.target, "found": len(found),
                         "witnesses": [w.to_dict() for w in found]}))
    elif args.format == "tabular":
        out.write(_rows_to_table(["target", "witness"],
                                 [[args.target, C.witness_summary(w)] for w in found]))
    else:
        for w in found:
            out.write(C.witness_summary(w) + "\n")
        if not found:
            out.write(f"no instance of {args.target} found within bounds\n")
        else:
            out.write(f"{len(found)} instance(s) of {args.target}\n")
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return cmd_validate(args, out)
        if args.command == "classify":
            return cmd_classify(args, out)
        if args.command == "closure":
            return cmd_closure(args, out)
        if args.command == "profile":
            return cmd_profile(args, out)
        if args.command == "map-audit":
            return cmd_map_audit(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        return cmd_mine(args, out, err)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
