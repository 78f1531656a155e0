"""Command-line front end.

    matchcx gen complete 7
    matchcx check cm graph.txt --field gf:3
    matchcx betti graph.txt --field q
    matchcx reproduce kn

Reports are JSON on stdout. Exit codes: 0 evaluated (whatever the verdict),
1 reproduction mismatch, 2 invalid input or usage, 3 indeterminate search.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .classify import classify_report
from .complexes import f_vector, is_pure, matching_complex, strong_connectivity
from .decide import (
    is_cohen_macaulay,
    is_gorenstein,
    is_shellable,
    is_vertex_decomposable,
    shedding_order,
    vertex_decomposition,
)
from .errors import InvalidInputError
from .figures import BUILTINS
from .graphs import FAMILIES, Graph, cameron_walker, generate
from .homology import BACKEND, FieldSpec, reduced_betti
from .io import format_graph6, format_graph_file, parse_graph6, parse_graph_file

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_INDETERMINATE = 0, 1, 2, 3

PREDICATES = ("pure", "sc", "cm", "vd", "shellable", "gorenstein", "classify")


def _read_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph6(text) if fmt == "graph6" else parse_graph_file(text)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mapping(text: str) -> dict[int, int]:
    """``"0=2,2=1"`` -> ``{0: 2, 2: 1}``."""
    out = {}
    for part in filter(None, text.split(",")):
        try:
            k, v = part.split("=")
            out[int(k)] = int(v)
        except ValueError:
            raise InvalidInputError(f"expected vertex=count pairs, got {part!r}") from None
    return out


def _graph_summary(G: Graph) -> dict:
    return {"n": G.n, "m": G.m, "edges": [list(e) for e in G.edges]}


def _complex_summary(G: Graph) -> dict:
    cx = matching_complex(G)
    sc, why = strong_connectivity(cx)
    return {
        "dim": cx.dim,
        "facets": len(cx.masks),
        "f_vector": f_vector(cx),
        "pure": is_pure(cx),
        "strongly_connected": sc,
        "strong_connectivity_note": why,
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


# -- commands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family in BUILTINS:
        if args.params:
            raise InvalidInputError(f"{args.family} takes no parameters")
        G = BUILTINS[args.family]()
    elif args.family == "cameron_walker":
        if not args.base:
            raise InvalidInputError("cameron_walker needs --base FILE")
        base = _read_graph(args.base, args.format)
        G = cameron_walker(base, _mapping(args.leaves or ""), _mapping(args.triangles or ""))
    else:
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise InvalidInputError("family parameters must be integers") from None
        try:
            G = generate(args.family, *params)
        except TypeError:
            raise InvalidInputError(f"wrong number of parameters for {args.family}") from None
    text = format_graph6(G) + "\n" if args.out_format == "graph6" else format_graph_file(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args) -> int:
    G = _read_graph(args.input, args.format)
    started = time.perf_counter()
    field = args.field
    cx = matching_complex(G)
    report = {"input": _graph_summary(G), "complex": _complex_summary(G)}
    checks: dict = {}
    witness = None
    status = EXIT_OK
    pred = args.predicate
    if pred == "pure":
        checks["pure"] = is_pure(cx)
    elif pred == "sc":
        checks["sc"] = report["complex"]["strongly_connected"]
    elif pred == "cm":
        checks["cm"] = is_cohen_macaulay(cx, field)
    elif pred == "gorenstein":
        checks["gorenstein"] = is_gorenstein(cx, field)
    elif pred == "vd":
        verdict = is_vertex_decomposable(cx, budget=args.budget)
        if verdict is None:
            checks["vd"] = "indeterminate"
            status = EXIT_INDETERMINATE
        else:
            checks["vd"] = verdict
            if verdict:
                # verdicts are memoised, so rebuilding the tree is cheap and unbudgeted
                tree = vertex_decomposition(cx)
                witness = {"shedding_order": shedding_order(tree), "vertex_decomposition": tree}
    elif pred == "shellable":
        res = is_shellable(cx, budget=args.budget)
        if res.verdict is None:
            checks["shellable"] = "indeterminate"
            status = EXIT_INDETERMINATE
        else:
            checks["shellable"] = res.verdict
            if res.verdict:
                witness = {"shelling_order": [list(f) for f in res.order]}
        checks["shellable_reason"] = res.reason
    elif pred == "classify":
        checks.update(classify_report(G, oracle=args.oracle, field=field))
    if pred in ("cm", "gorenstein") or (pred == "classify" and args.oracle):
        report["field"] = str(field)
    report["checks"] = checks
    if witness is not None:
        report["witness"] = witness
    report["timing"] = {"seconds": round(time.perf_counter() - started, 6), "backend": BACKEND}
    _emit(report)
    return status


def cmd_betti(args) -> int:
    G = _read_graph(args.input, args.format)
    started = time.perf_counter()
    cx = matching_complex(G)
    betti = reduced_betti(cx, args.field)
    report = {
        "input": _graph_summary(G),
        "complex": _complex_summary(G),
        "field": str(args.field),
        "betti": {str(k): v for k, v in betti.as_dict().items()},
        "timing": {"seconds": round(time.perf_counter() - started, 6), "backend": BACKEND},
    }
    _emit(report)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .reproduce import SUITES

    names = list(SUITES) if args.suite == "all" else [args.suite]
    claims = []
    for name in names:
        claims += SUITES[name]()
    if args.json:
        _emit({"claims": [c.as_dict() for c in claims],
               "passed": sum(c.passed for c in claims), "total": len(claims)})
    else:
        for c in claims:
            print(c.line())
        print(f"{sum(c.passed for c in claims)}/{len(claims)} claims reproduced")
    return EXIT_OK if all(c.passed for c in claims) else EXIT_MISMATCH


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .reproduce import SUITES

    parser = argparse.ArgumentParser(prog="matchcx", description="Matching complexes of finite simple graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    p = sub.add_parser("gen", help="write a named graph")
    p.add_argument("family", choices=sorted(FAMILIES) + sorted(BUILTINS))
    p.add_argument("params", nargs="*")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--base", help="cameron_walker: base graph file")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist",
                   help="format of --base")
    p.add_argument("--leaves", help="cameron_walker: X-vertex=count,...")
    p.add_argument("--triangles", help="cameron_walker: Y-vertex=count,...")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="decide a property of the matching complex")
    p.add_argument("predicate", choices=PREDICATES)
    add_input(p)
    p.add_argument("--field", type=_field, default=FieldSpec(0), help="q or gf:p (default q)")
    p.add_argument("--budget", type=int, default=None, help="search node cap for vd/shellable")
    p.add_argument("--oracle", action="store_true", help="classify: also run the decision oracles")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", help="reduced Betti numbers of the matching complex")
    add_input(p)
    p.add_argument("--field", type=_field, default=FieldSpec(0))
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("reproduce", help="recompute the published claims")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))
    try:
        return args.func(args)
    except (InvalidInputError, OSError) as exc:
        print(f"matchcx: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
