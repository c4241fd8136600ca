"""Command-line interface.

Reports are JSON lines on stdout. Commands whose main product is a graph
print its graph6 line first and a JSON metadata line after it; ``check``
skips JSON-object lines, so ``construct ... | check`` works directly.

Exit codes: 0 success, 1 violation or mismatch found, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence, TextIO

from .edit import augmentation_sequence, reduce_min_degree
from .errors import GraphError
from .extremal import construct_b, construct_q, g_formula, g_hypotheses_hold, phi
from .graph import Graph, add_edge, cut_edges, edge, is_connected, min_degree
from .graph6 import parse_graph6, to_graph6
from .oracle import random_chordal, verify_tables
from .recognition import is_chordal, simplicial_vertices

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _emit(obj: Any, out: TextIO) -> None:
    print(json.dumps(obj, ensure_ascii=False), file=out)


def check_report(g: Graph) -> dict:
    """Everything ``check`` prints for one graph."""
    verdict = is_chordal(g)
    delta = min_degree(g)
    bound = phi(g.order, delta) if delta >= 1 else None
    meets = g.size >= bound if (verdict.chordal and bound is not None) else None
    return {
        "graph6": to_graph6(g),
        "order": g.order,
        "size": g.size,
        "min_degree": delta,
        "is_chordal": verdict.chordal,
        "certificate": list(verdict.ordering) if verdict.ordering is not None else None,
        "witness_cycle": list(verdict.cycle) if verdict.cycle is not None else None,
        "is_connected": is_connected(g),
        "cut_edges": [list(e) for e in cut_edges(g)],
        "simplicial_vertices": simplicial_vertices(g),
        "phi_lower_bound": bound,
        "meets_lower_bound": meets,
    }


def _is_json_object(line: str) -> bool:
    # '"' is outside the graph6 alphabet, so a JSON object can never be a valid graph6 line
    try:
        return isinstance(json.loads(line), dict)
    except ValueError:
        return False


def cmd_phi(args: argparse.Namespace, out: TextIO) -> int:
    result: dict[str, Any] = {"phi": phi(args.n, args.k)}
    if g_hypotheses_hold(args.n, args.k):
        result["g"] = g_formula(args.n, args.k)
    else:
        result["g"] = None
        result["note"] = "g requires n ≥ k+2"
    _emit(result, out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    build = construct_q if args.family == "q" else construct_b
    res = build(args.n, args.k)
    print(to_graph6(res.graph), file=out)
    _emit({"family": args.family, "n": args.n, "k": args.k, **res.to_json()}, out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    source = sys.stdin if args.input in (None, "-") else open(args.input, encoding="ascii")
    status = EXIT_OK
    try:
        for lineno, raw in enumerate(source, 1):
            line = raw.strip()
            if not line or _is_json_object(line):
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                _emit({"line": lineno, "input": line, "error": str(exc)}, out)
                status = EXIT_VIOLATION
                continue
            _emit(check_report(g), out)
    finally:
        if source is not sys.stdin:
            source.close()
    return status


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    all_match = True
    rows = 0
    for row in verify_tables(args.n_max, args.mode, jobs=args.jobs):
        _emit(row.to_json(), out)
        out.flush()
        all_match &= row.match
        rows += 1
    print(f"{rows} rows, {'all match' if all_match else 'MISMATCH'}", file=sys.stderr)
    return EXIT_OK if all_match else EXIT_VIOLATION


def cmd_reduce(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph6(args.graph6)
    h, trace = reduce_min_degree(g, args.p)
    print(to_graph6(h), file=out)
    _emit({"p": args.p, "min_degree": min_degree(h), **trace.to_json()}, out)
    return EXIT_OK


def cmd_augment(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph6(args.graph6)
    seq = augmentation_sequence(g, args.x)
    y = seq[-1]
    h = add_edge(g, (args.x, y))
    print(to_graph6(h), file=out)
    _emit({"x": args.x, "y": y, "edge": list(edge(args.x, y)), "candidates_tried": seq}, out)
    return EXIT_OK


def cmd_random(args: argparse.Namespace, out: TextIO) -> int:
    print(to_graph6(random_chordal(args.n, args.density, args.seed)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal-extremal",
        description="Chordal graphs of minimum size for given order and minimum degree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="print the unrestricted (phi) and connected (g) minimum sizes")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("construct", help="print an extremal graph as graph6 plus JSON metadata")
    p.add_argument("family", choices=["q", "b"], help="q: any chordal graph; b: connected")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="report chordality and extremal data for graph6 lines")
    p.add_argument("input", nargs="?", help="file of graph6 lines (default: stdin)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="compare exhaustive search with the formulas up to n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--mode", choices=["both", "unrestricted", "connected"], default="both")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the search")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", help="delete edges at simplicial vertices down to min degree p")
    p.add_argument("graph6")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("augment", help="find y with G+xy chordal")
    p.add_argument("graph6")
    p.add_argument("x", type=int)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("random", help="print a seeded random chordal graph")
    p.add_argument("n", type=int)
    p.add_argument("density", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
