"""Command-line frontend: graph6 in, text or line-delimited JSON out.

Input is a file of graph6 records (one per line), "-" for stdin, the key
of a built-in graph (K5, C7, petersen, petersen_minus_vertex, ...), or
"bundled" for the packaged corpus of connected graphs on up to 8 vertices.

Exit status: 0 completed with zero violations, 1 violations found,
2 usage or parse error.  Identical invocations produce byte-identical
output regardless of --jobs.
"""

import argparse
import json
import sys
from multiprocessing import Pool

from .graph import (Graph6Error, SubgraphSearchCapExceeded, bundled_corpus_path,
                    encode_graph6, find_overfull_subgraphs, is_overfull, iter_graph6,
                    named_graph, parse_graph6)
from .solver import (GraphClass, chromatic_index, classify, enumerate_colorings,
                     is_delta_critical, vizing_color)
from .structures import find_branches, find_forks, find_kierstead_paths, maximal_multifan
from .verify import CHECKS, SamplingConfig, _conjecture_worker, scan_conjecture

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2

STRUCTURE_COMMANDS = ("fan", "kpaths", "forks", "branches")


class UsageError(Exception):
    pass


def _emit(record):
    print(json.dumps(record, separators=(",", ":"), sort_keys=False))


def _input_records(name):
    """Resolve the input argument to a list of (line_number, record)."""
    if name == "-":
        return list(iter_graph6(sys.stdin))
    if name == "bundled":
        with bundled_corpus_path().open() as fh:
            return list(iter_graph6(fh))
    try:
        return [(1, encode_graph6(named_graph(name)))]
    except KeyError:
        pass
    try:
        with open(name) as fh:
            return list(iter_graph6(fh))
    except OSError as exc:
        raise UsageError(f"cannot read input {name!r}: {exc}")


def _parse_all(records):
    graphs = []
    for lineno, record in records:
        try:
            graphs.append((lineno, record, parse_graph6(record)))
        except Graph6Error as exc:
            raise UsageError(f"line {lineno}: {exc}")
    return graphs


def _pick_edge(g, args, lineno):
    if args.edge is not None:
        u, v = args.edge
        if not g.has_edge(u, v):
            raise UsageError(f"line {lineno}: ({u},{v}) is not an edge")
        return (u, v) if u < v else (v, u)
    if g.m == 0:
        raise UsageError(f"line {lineno}: graph has no edges")
    return g.edges[0]


def _seed_coloring(g, e, args):
    """One proper coloring of g-e with max-degree colors, chosen by --seed."""
    batch = enumerate_colorings(g, e, g.max_degree, budget=1, seed=args.seed)
    return batch.colorings[0] if batch.colorings else None


def _run_scalar(args, graphs):
    for lineno, record, g in graphs:
        if args.command == "chi":
            value = chromatic_index(g)
            out = {"graph": record, "chi": value}
        elif args.command == "classify":
            if g.m == 0:
                raise UsageError(f"line {lineno}: edgeless graph has no class")
            value = "Class1" if classify(g) is GraphClass.CLASS1 else "Class2"
            out = {"graph": record, "class": value}
        elif args.command == "critical":
            if g.m == 0 or not g.is_connected():
                value = "not-applicable"
                out = {"graph": record, "delta_critical": None}
            else:
                value = "true" if is_delta_critical(g) else "false"
                out = {"graph": record, "delta_critical": value == "true"}
        else:  # overfull
            value = "true" if is_overfull(g) else "false"
            out = {"graph": record, "overfull": value == "true"}
        if args.format == "records":
            _emit(out)
        else:
            print(value)
    return EXIT_OK


def _run_subgraphs(args, graphs):
    for lineno, record, g in graphs:
        try:
            sets = find_overfull_subgraphs(g, cap=args.cap)
        except SubgraphSearchCapExceeded as exc:
            raise UsageError(f"line {lineno}: {exc}")
        if args.format == "records":
            _emit({"graph": record, "overfull_subgraphs": [list(s) for s in sets]})
        else:
            if not sets:
                print("(none)")
            for s in sets:
                print(" ".join(map(str, s)))
    return EXIT_OK


def _run_color(args, graphs):
    for _, record, g in graphs:
        cert = vizing_color(g)
        if args.format == "records":
            _emit({"graph": record, "k": cert.coloring.k, "colors_used": cert.colors_used,
                   "coloring": cert.coloring.dump()})
        else:
            print(f"graph {record} colors_used={cert.colors_used} k={cert.coloring.k}")
            if cert.coloring.dump():
                print(cert.coloring.dump())
    return EXIT_OK


def _run_structures(args, graphs):
    for lineno, record, g in graphs:
        e = _pick_edge(g, args, lineno)
        coloring = _seed_coloring(g, e, args)
        lines = []
        if coloring is None:
            note = f"no proper coloring of the remaining edges with {g.max_degree} colors"
        else:
            note = None
            if args.command == "fan":
                center = args.center if args.center is not None else e[0]
                if center not in e:
                    raise UsageError(f"line {lineno}: --center must be an endpoint of the edge")
                lines.append(maximal_multifan(coloring, center).dump())
            elif args.command == "kpaths":
                root = args.center if args.center is not None else e[0]
                if root not in e:
                    raise UsageError(f"line {lineno}: --center must be an endpoint of the edge")
                lines.extend(p.dump() for p in find_kierstead_paths(coloring, args.max_edges, root=root))
            elif args.command == "forks":
                for a, b in (e, e[::-1]):
                    lines.extend(f.dump() for f in find_forks(coloring, a, b))
            else:  # branches
                for a, b in (e, e[::-1]):
                    lines.extend(s.dump() for s in find_branches(coloring, short=args.short, a=a, b=b))
        if args.format == "records":
            _emit({"graph": record, "edge": list(e), "seed": args.seed, "note": note,
                   "coloring": None if coloring is None else coloring.dump(),
                   "structures": lines})
        else:
            print(f"graph {record} edge {e[0]} {e[1]}")
            if note:
                print(f"  {note}")
            elif not lines:
                print("  (none)")
            for line in lines:
                print(f"  {line}")
    return EXIT_OK


def _check_worker(item):
    check_id, lineno, record, sampling = item
    try:
        g = parse_graph6(record)
    except Graph6Error as exc:
        return {"line": lineno, "graph": record, "error": str(exc)}
    report = CHECKS[check_id](g, SamplingConfig(*sampling))
    out = {"line": lineno}
    out.update(report.to_record())
    return out


def _run_verify(args, records):
    sampling = (args.budget, args.sample, args.seed)
    check = args.check.replace("_", "-")
    total_violations = 0
    if check == "conjecture":
        mapper = None
        pool = None
        if args.jobs > 1:
            pool = Pool(args.jobs)
            mapper = lambda fn, items: pool.imap(fn, items, chunksize=8)
        entries = []
        report = scan_conjecture((rec for _, rec in records), cap=args.cap,
                                 on_graph=entries.append, mapper=mapper)
        if pool is not None:
            pool.close()
            pool.join()
        total_violations = len(report.violations)
        if args.format == "records":
            for entry in entries:
                _emit(entry)
            _emit({"summary": report.to_record()})
        else:
            for v in report.violations:
                print(f"violation {v.graph6} {v.condition}: {v.detail}")
            print(report.summary_line())
            for key in sorted(report.counters):
                print(f"  {key}={report.counters[key]}")
    else:
        if check not in CHECKS:
            raise UsageError(f"unknown check {args.check!r}; choose from "
                             f"{', '.join(sorted(CHECKS))}, conjecture")
        items = [(check, lineno, record, sampling) for lineno, record in records]
        if args.jobs > 1:
            with Pool(args.jobs) as pool:
                results = list(pool.imap(_check_worker, items, chunksize=4))
        else:
            results = [_check_worker(item) for item in items]
        parse_failures = 0
        instances = applicable = vacuous = 0
        for out in results:
            if "error" in out:
                parse_failures += 1
            else:
                instances += out["instances_checked"]
                applicable += out["applicable"]
                vacuous += 1 if out["vacuous"] else 0
                total_violations += len(out["violations"])
            if args.format == "records":
                _emit(out)
            else:
                if "error" in out:
                    print(f"line {out['line']}: parse error: {out['error']}")
                else:
                    print(f"{out['check']} {out['graph']}: instances={out['instances_checked']} "
                          f"applicable={out['applicable']} vacuous={str(out['vacuous']).lower()} "
                          f"violations={len(out['violations'])}")
        summary = {"summary": {"check": check, "graphs": len(results) - parse_failures,
                               "parse_failures": parse_failures, "instances_checked": instances,
                               "applicable": applicable, "vacuous_graphs": vacuous,
                               "violations": total_violations}}
        if args.format == "records":
            _emit(summary)
        else:
            s = summary["summary"]
            print(f"TOTAL graphs={s['graphs']} instances={s['instances_checked']} "
                  f"applicable={s['applicable']} vacuous={s['vacuous_graphs']} "
                  f"violations={s['violations']}")
    return EXIT_VIOLATIONS if total_violations else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vizing",
        description="Edge-coloring toolkit: exact chromatic index, constructive "
                    "coloring, colored-structure dumps, and lemma verification "
                    "over graph6 corpora.")
    parser.add_argument("--seed", type=int, default=0, help="seed for coloring sampling")
    parser.add_argument("--budget", type=int, default=5000,
                        help="exhaustive enumeration limit per (graph, edge)")
    parser.add_argument("--sample", type=int, default=200,
                        help="sample size when the budget is exceeded")
    parser.add_argument("--cap", type=int, default=20, help="vertex cap for subgraph search")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    parser.add_argument("--format", choices=("text", "records"), default="text",
                        help="records = one JSON object per line")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, desc in (("chi", "chromatic index"),
                       ("classify", "Class1 or Class2"),
                       ("critical", "delta-criticality"),
                       ("overfull", "overfull test"),
                       ("subgraphs", "induced overfull subgraph sets"),
                       ("color", "constructive coloring with at most max degree + 1 colors")):
        p = sub.add_parser(name, help=desc)
        p.add_argument("input")

    for name, desc in (("fan", "maximal multi-fan at an endpoint of an edge"),
                       ("kpaths", "Kierstead paths from an endpoint of an edge"),
                       ("forks", "fork configurations at an edge"),
                       ("branches", "branch configurations at an edge")):
        p = sub.add_parser(name, help=desc)
        p.add_argument("input")
        p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
        p.add_argument("--center", type=int, help="fan center / path root (edge endpoint)")
        if name == "kpaths":
            p.add_argument("--max-edges", type=int, default=3)
        if name == "branches":
            p.add_argument("--short", action="store_true")

    p = sub.add_parser("verify", help="run a lemma/theorem/conjecture check")
    p.add_argument("check")
    p.add_argument("input")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or args.budget < 0 or args.sample < 0 or args.jobs < 1:
        print("vizing: seed/budget/sample must be nonnegative and jobs positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = _input_records(args.input)
        if args.command == "verify":
            return _run_verify(args, records)
        graphs = _parse_all(records)
        if args.command in ("chi", "classify", "critical", "overfull"):
            return _run_scalar(args, graphs)
        if args.command == "subgraphs":
            return _run_subgraphs(args, graphs)
        if args.command == "color":
            return _run_color(args, graphs)
        return _run_structures(args, graphs)
    except UsageError as exc:
        print(f"vizing: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
