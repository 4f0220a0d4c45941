"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 internal invariant failure (a reproduction bundle is written).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .colorer import LIST_SIZE, BodyTrace, star_edge_color_list
from .errors import InputError, InternalInvariantError
from .formats import (format_coloring, format_graph, parse_coloring, parse_graph, parse_lists,
                      uniform_lists)
from .fuzz import FuzzConfig, run_fuzz, write_bundle
from .generators import random_cubic, random_subcubic
from .oracle import DEFAULT_MAX_EDGES, NAMED_GRAPHS, named_graph, star_chromatic_index
from .verifier import find_violation, respects_lists

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_color(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    if not g.is_subcubic():
        raise InputError(f"graph has maximum degree {g.max_degree()}, expected at most 3")
    if args.lists:
        lists = parse_lists(_read(args.lists), g.edge_count)
    else:
        lists = uniform_lists(g, args.uniform_k)
    traces: list[BodyTrace] = []
    try:
        coloring = star_edge_color_list(g, lists, traces)
    except InternalInvariantError as exc:
        path = write_bundle(g, lists, exc.bundle.get("stages", []), str(exc))
        print(f"internal invariant failure: {exc}\ndiagnostics: {path}", file=sys.stderr)
        return EXIT_INTERNAL
    if find_violation(g, coloring) is not None or not respects_lists(coloring, lists):
        path = write_bundle(g, lists, [], "self-verification failed")
        print(f"self-verification failed\ndiagnostics: {path}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.dump_cactus:
        for k, tr in enumerate(traces):
            emap = tr.edge_map
            print(f"# piece {k}", file=sys.stderr)
            for cycle in tr.cactus.cycles:
                print("cycle " + " ".join(str(emap[e]) for e in cycle), file=sys.stderr)
            for e in sorted(tr.cactus.connectors):
                print(f"connector {emap[e]}", file=sys.stderr)
            for e in sorted(tr.cactus.leftover_matching):
                print(f"mprime {emap[e]}", file=sys.stderr)
    _emit(format_coloring(coloring), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    coloring = parse_coloring(_read(args.coloring), g.edge_count)
    lists = parse_lists(_read(args.lists), g.edge_count) if args.lists else None
    viol = find_violation(g, coloring)
    if viol is not None:
        print(f"{viol.kind} " + " ".join(map(str, viol.witness)))
        return EXIT_FAIL
    if lists is not None and not respects_lists(coloring, lists):
        bad = min(e for e, c in coloring.items() if c not in lists[e])
        print(f"list_violation {bad}")
        return EXIT_FAIL
    print("ok")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "named":
        if not args.name:
            raise InputError("gen named needs a graph name")
        g = named_graph(args.name)
    else:
        if args.n is None:
            raise InputError(f"gen {args.kind} needs --n")
        rng = random.Random(args.seed)
        if args.kind == "random_cubic":
            g = random_cubic(args.n, rng, args.allow_parallel)
        else:
            g = random_subcubic(args.n, rng, args.delete_prob, args.allow_parallel)
    _emit(format_graph(g), args.out)
    return EXIT_OK


def cmd_chi_star(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    k = star_chromatic_index(g, args.max_k, args.max_edges)
    print(k if k is not None else f">{args.max_k}")
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    config = FuzzConfig(args.count, args.max_n, args.palette, args.seed, args.allow_parallel)
    report = run_fuzz(config)
    text = json.dumps(report.as_dict(), indent=2, sort_keys=True)
    _emit(text + "\n", args.out)
    return EXIT_OK if not report.failures else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starlit",
                                     description="Star list edge-coloring of subcubic multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph from 7-lists")
    p.add_argument("graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--lists")
    src.add_argument("--uniform-k", type=int)
    p.add_argument("-o", "--out")
    p.add_argument("--dump-cactus", action="store_true",
                   help="print cycles, connectors and leftover matching edges to stderr")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--lists")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a named or random graph")
    p.add_argument("kind", choices=["named", "random_cubic", "random_subcubic"])
    p.add_argument("name", nargs="?", help=f"one of: {', '.join(sorted(NAMED_GRAPHS))}")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-parallel", action="store_true")
    p.add_argument("--delete-prob", type=float, default=0.2)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chi-star", help="exact star chromatic index of a small graph")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=7)
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_chi_star)

    p = sub.add_parser("fuzz", help="randomized coloring campaign")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--palette", type=int, default=21)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-parallel", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "uniform_k", None) is not None and args.uniform_k < LIST_SIZE:
        print(f"error: --uniform-k must be at least {LIST_SIZE}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
