"""Command-line front end.

Graphs travel between subcommands as edge-list text on stdin/stdout, e.g.::

    arbcount construct swirl 7 | arbcount count --quantity arb

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from fractions import Fraction
from math import prod

from . import bounds, constructions as C
from .counting import NotEulerianError, allarb, arb_eulerian, count, spanning_trees
from .graphs import (
    DirectedMultigraph,
    UndirectedMultigraph,
    is_balanced,
    is_strongly_connected,
    out_degrees,
)
from .io import GraphFormatError, dumps_report, format_dot, format_graph, make_report, parse_graph, result_entry
from .search import DEFAULT_BUDGET, OBJECTIVES, BudgetExceeded, extremal_eulerian, extremal_orientation
from .verify import THEOREMS, verify_theorem

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("swirl", "transitive", "paley", "knm-blowup", "symmetric", "double", "complete", "complete-bipartite")


class InputError(Exception):
    pass


def _read_graph(path: str | None):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from None
    return parse_graph(text)


def _read_digraph(path: str | None) -> DirectedMultigraph:
    G = _read_graph(path)
    if not isinstance(G, DirectedMultigraph):
        raise InputError("expected a 'digraph' input")
    return G


def _read_undirected(path: str | None) -> UndirectedMultigraph:
    G = _read_graph(path)
    if isinstance(G, DirectedMultigraph):
        return G.underlying()
    return G


def _ints(params, k: int, name: str) -> list[int]:
    if len(params) != k:
        raise InputError(f"{name} takes {k} integer parameter(s)")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise InputError(f"{name}: parameters must be integers") from None


def _emit(report: dict) -> None:
    sys.stdout.write(dumps_report(report) + "\n")


# ----------------------------------------------------------------------------
# subcommands


def cmd_count(args) -> int:
    t0 = time.perf_counter()
    G = _read_graph(args.input)
    if isinstance(G, UndirectedMultigraph):
        if args.quantity != "sp":
            raise InputError(f"{args.quantity} needs a 'digraph' input")
        entry = result_entry("sp", spanning_trees(G), method="determinant")
    else:
        res = count(G, args.quantity, args.root)
        entry = result_entry(res.kind, res.value, method=res.method)
    if args.root is not None:
        entry["root"] = args.root
    _emit(make_report("count", args.input or "-", [entry], (time.perf_counter() - t0) * 1e3))
    return EXIT_OK


def build_family(family: str, params, input_path: str | None = None):
    if family == "swirl":
        return C.swirl(*_ints(params, 1, family))
    if family == "transitive":
        return C.transitive(*_ints(params, 1, family))
    if family == "paley":
        return C.paley(*_ints(params, 1, family))
    if family == "knm-blowup":
        return C.bipartite_blowup_minimizer(*_ints(params, 2, family))
    if family == "complete":
        return C.complete_graph(*_ints(params, 1, family))
    if family == "complete-bipartite":
        return C.complete_bipartite(*_ints(params, 2, family))
    if family == "cycle":
        return C.cycle_graph(*_ints(params, 1, family))
    if family == "path":
        return C.path_graph(*_ints(params, 1, family))
    if family in ("symmetric", "double"):
        source = params[0] if params else input_path
        G = _read_undirected(source)
        return C.symmetric_orientation(G) if family == "symmetric" else C.double(G)
    raise InputError(f"unknown family {family!r}")


def cmd_construct(args) -> int:
    G = build_family(args.family, args.params)
    text = format_dot(G) if args.format == "dot" else format_graph(G)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_graph_spec(spec: str) -> UndirectedMultigraph:
    """``family:p1,p2`` (optionally prefixed ``double-``) or a file path."""
    if ":" not in spec:
        return _read_undirected(spec)
    family, _, rest = spec.partition(":")
    doubled = family.startswith("double-")
    if doubled:
        family = family[len("double-"):]
    params = [p for p in rest.split(",") if p]
    G = build_family(family, params)
    if isinstance(G, DirectedMultigraph):
        G = G.underlying()
    return C.double(G) if doubled else G


def cmd_bound(args) -> int:
    t0 = time.perf_counter()
    bid = args.bound_id
    approx = args.float
    results = []
    if args.input is None and bid in ("LB-EULER-KN", "UB-HADAMARD", "LB-KNM"):
        if args.n is None or (bid == "LB-KNM" and args.m is None):
            raise InputError(f"{bid} needs an input file or --n (and --m)")
        value = {
            "LB-EULER-KN": lambda: bounds.lb_eulerian_tournament(args.n),
            "UB-HADAMARD": lambda: bounds.ub_hadamard(args.n),
            "LB-KNM": lambda: Fraction(bounds.lb_knm(args.n, args.m)),
        }[bid]()
        results.append(result_entry(bid, value, bound=value, approx=approx))
        instance = f"n={args.n}" + (f",m={args.m}" if args.m is not None else "")
        _emit(make_report("bound", instance, results, (time.perf_counter() - t0) * 1e3))
        return EXIT_OK

    G = _read_graph(args.input)
    if bid == "LB-SPTREE" and isinstance(G, UndirectedMultigraph):
        lb = bounds.lb_sptree(G)
        results.append(result_entry("sp", spanning_trees(G), bound=lb, approx=approx))
    else:
        if not isinstance(G, DirectedMultigraph):
            raise InputError(f"{bid} needs a 'digraph' input")
        D = G
        degs = out_degrees(D)
        if bid == "LB-TOURN":
            lb = bounds.lb_tournament(degs)
            a = allarb(D)
            results.append(result_entry("allarb", a, bound=lb, satisfied=a >= lb, tight=a == lb, approx=approx))
        elif bid == "UB-TRIVIAL":
            ub = bounds.ub_trivial(degs)
            a = allarb(D)
            strict = ub < prod(d + 1 for d in degs) or D.n == 1
            results.append(result_entry("allarb", a, bound=ub, satisfied=a <= ub and strict, tight=a == ub, approx=approx))
        elif bid in ("UB-FROB", "UB-MAXDEG"):
            fn = bounds.ub_frobenius_holds if bid == "UB-FROB" else bounds.ub_maxdeg_holds
            rep = fn(D)
            results.append(
                result_entry(
                    "allarb", rep.quantity, bound=rep.bound, satisfied=rep.satisfied, tight=rep.tight,
                    approx=approx, squared=True,
                )
            )
        elif bid in ("LB-EULER-KN", "UB-HADAMARD"):
            a = arb_eulerian(D)
            b = bounds.lb_eulerian_tournament(D.n) if bid == "LB-EULER-KN" else bounds.ub_hadamard(D.n)
            ok = a >= b if bid == "LB-EULER-KN" else a <= b
            results.append(result_entry("arb", a, bound=b, satisfied=ok, tight=a == b, approx=approx))
        elif bid == "LB-KNM":
            if args.n is None or args.m is None:
                raise InputError("LB-KNM on an instance needs --n and --m")
            a = arb_eulerian(D)
            b = bounds.lb_knm(args.n, args.m)
            results.append(result_entry("arb", a, bound=b, satisfied=a >= b, tight=a == b, approx=approx))
        elif bid == "LB-SPTREE":
            a = arb_eulerian(D)
            b = bounds.lb_sptree(D.underlying())
            results.append(result_entry("arb", a, bound=b, satisfied=a >= b, tight=a == b, approx=approx))
        else:
            raise InputError(f"unknown bound id {bid!r}")
    _emit(make_report("bound", args.input, results, (time.perf_counter() - t0) * 1e3))
    return EXIT_OK if all(r.get("satisfied", True) for r in results) else EXIT_FAILED


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    D = _read_digraph(args.input)
    pred = args.predicate
    if pred == "locally-transitive":
        ok = bounds.is_locally_transitive(D)
    elif pred == "hadamard":
        ok = bounds.is_hadamard_tournament(D)
    elif pred == "balanced":
        ok = is_balanced(D)
    else:
        ok = is_balanced(D) and is_strongly_connected(D)
    _emit(make_report("check", args.input or "-", [result_entry(pred, ok, satisfied=ok)], (time.perf_counter() - t0) * 1e3))
    return EXIT_OK


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    G = _parse_graph_spec(args.graph)
    if args.seed is not None:
        perm = list(range(G.n))
        random.Random(args.seed).shuffle(perm)
        G = G.relabel(perm)
    fn = extremal_orientation if args.all_orientations else extremal_eulerian
    res = fn(G, args.objective, jobs=args.jobs, iso_dedup=args.iso_dedup, budget=args.budget)
    entry = result_entry(
        args.objective,
        res.value if res.value is not None else "none",
        witnesses=res.witnesses,
        space_size=str(res.space_size),
        deduplicated=res.deduplicated,
    )
    if res.dedup_skipped:
        entry["warning"] = "isomorphism cap exceeded; witnesses are labeled"
    _emit(make_report("search", args.graph, [entry], (time.perf_counter() - t0) * 1e3))
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    ids = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    results = []
    ok = True
    for tid in ids:
        rep = verify_theorem(tid, args.max_n)
        ok &= rep.passed
        for c in rep.checks:
            entry = result_entry(tid, c.passed, satisfied=c.passed, check=c.name)
            if c.bound is not None:
                entry["bound"] = {"num": str(c.bound.numerator), "den": str(c.bound.denominator)}
            if c.extremum is not None:
                entry["extremum"] = str(c.extremum)
            if c.equality_matched is not None:
                entry["tight"] = c.equality_matched
            if c.witnesses:
                entry["witnesses"] = [format_graph(w) for w in c.witnesses]
            if c.detail:
                entry["detail"] = c.detail
            results.append(entry)
    _emit(make_report("verify", args.theorem, results, (time.perf_counter() - t0) * 1e3))
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arbcount", description=__doc__.split("\n")[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count arborescences, spanning trees or Eulerian tours")
    c.add_argument("--quantity", choices=("arb", "allarb", "sp", "tours"), default="allarb")
    c.add_argument("--root", type=int)
    c.add_argument("input", nargs="?")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("construct", help="emit a named graph or orientation")
    c.add_argument("family", choices=FAMILIES + ("cycle", "path"))
    c.add_argument("params", nargs="*")
    c.add_argument("--out")
    c.add_argument("--format", choices=("edge-list", "dot"), default="edge-list")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("bound", help="evaluate a bound, optionally on an instance")
    c.add_argument("bound_id", choices=bounds.BOUND_IDS)
    c.add_argument("input", nargs="?")
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--float", action="store_true", help="add approximate decimals for reading")
    c.set_defaults(func=cmd_bound)

    c = sub.add_parser("check", help="test a structural predicate")
    c.add_argument("predicate", choices=("locally-transitive", "hadamard", "balanced", "eulerian"))
    c.add_argument("input", nargs="?")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("search", help="exhaustive extremal search over orientations")
    c.add_argument("objective", choices=OBJECTIVES)
    c.add_argument("--graph", required=True, help="graph file or family:params, e.g. complete:5, double-complete:3")
    c.add_argument("--all-orientations", action="store_true", help="search every orientation, not only Eulerian ones")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--iso-dedup", action="store_true")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--seed", type=int, help="relabel the input by a seeded random permutation first")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("verify", help="machine-check theorems on small instances")
    c.add_argument("theorem", choices=list(THEOREMS) + ["all"])
    c.add_argument("--max-n", type=int, default=5)
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"arbcount: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GraphFormatError, NotEulerianError, ValueError) as exc:
        print(f"arbcount: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
