"""Command-line interface: ``ricbound <command> ...``.

Exit status: 0 on success, 1 when a checked invariant fails (negative slack,
equality without reflectivity in a fuzz run), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .curvature import curvature_all_edges
from .families import FAMILIES, generate
from .graph import Graph, GraphError, cartesian_product, read_edge_list, write_edge_list
from .metrics import all_pairs, edge_betweenness, format_rational
from .report import REFLECTIVE_CAP, analyze, fuzz_inequality
from .rigidity import check_sharpness, is_reflective


class UsageError(Exception):
    pass


def _add_family_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="size parameter")
    p.add_argument("--k", type=int, help="subset size (johnson)")
    p.add_argument("--p", type=float, help="edge probability (erdos-renyi)")
    p.add_argument("--seed", type=int, default=0, help="seed (erdos-renyi)")


def _load(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_edge_list(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _graph_from_args(args) -> Graph:
    if args.family:
        if args.file:
            raise UsageError("give either a file or --family, not both")
        try:
            return generate(args.family, n=args.n, k=args.k, p=args.p, seed=args.seed)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
    if not args.file:
        raise UsageError("need an edge-list file or --family")
    return _load(args.file)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _connected(graph: Graph) -> Graph:
    try:
        graph.require_connected()
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    return graph


def cmd_generate(args) -> int:
    try:
        graph = generate(args.family, n=args.n, k=args.k, p=args.p, seed=args.seed)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(write_edge_list(graph), args.output)
    return 0


def cmd_analyze(args) -> int:
    graph = _connected(_graph_from_args(args))
    if args.no_reflective:
        refl = False
    elif args.reflective:
        refl = True
    else:
        refl = None
    try:
        rep = analyze(graph, reflective=refl, reflective_cap=args.reflective_cap, workers=args.workers)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _emit(rep.to_json(floats=args.float), args.output)
    elif args.csv:
        _emit(rep.edge_csv(), args.output)
    else:
        _emit(rep.summary(), args.output)
    if rep.slack < 0:
        print(f"invariant violated: negative slack {rep.slack}", file=sys.stderr)
        return 1
    return 0


def cmd_curvature(args) -> int:
    graph = _connected(_load(args.file))
    ric = curvature_all_edges(graph, workers=args.workers)
    _emit(ric.to_json() + "\n" if args.json else ric.to_csv(), args.output)
    return 0


def cmd_betweenness(args) -> int:
    graph = _connected(_load(args.file))
    g = edge_betweenness(graph)
    _emit(g.to_json() + "\n" if args.json else g.to_csv(), args.output)
    return 0


def cmd_reflective(args) -> int:
    graph = _connected(_load(args.file))
    rep = is_reflective(graph)
    payload = {"reflective": rep.reflective, "edges": rep.to_records()}
    _emit(json.dumps(payload) + "\n", args.output)
    return 0


def cmd_sharpness(args) -> int:
    graph = _connected(_load(args.file))
    res = check_sharpness(graph)
    payload = {"sharp": res.sharp}
    if not res.sharp:
        z, x, y = res.violation
        payload["violation"] = {"z": z, "x": x, "y": y, "laplacian_gap": format_rational(res.lhs), "ric": format_rational(res.ric)}
    _emit(json.dumps(payload) + "\n", args.output)
    return 0


def cmd_fuzz(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    rep = fuzz_inequality(
        args.count,
        n_range=(args.n_min, args.n_max),
        p_range=(args.p_min, args.p_max),
        seed=args.seed,
        workers=args.workers,
    )
    _emit(json.dumps(rep.to_dict(), indent=2) + "\n", args.output)
    return 0 if rep.ok else 1


def cmd_product(args) -> int:
    g = cartesian_product(_load(args.a), _load(args.b))
    _emit(write_edge_list(g), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ricbound",
        description="Exact Ollivier curvature, edge betweenness and the bound E_g Ric * E d <= E Deg.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family graph as an edge list")
    p.add_argument("family", choices=sorted(FAMILIES))
    _add_family_params(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="averages, slack, sharpness and reflectivity")
    p.add_argument("file", nargs="?")
    p.add_argument("--family", choices=sorted(FAMILIES))
    _add_family_params(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="per-edge g and Ric table")
    p.add_argument("--float", action="store_true", help="add decimal approximations (JSON)")
    p.add_argument("--no-reflective", action="store_true")
    p.add_argument("--reflective", action="store_true", help="ignore the size cap")
    p.add_argument("--reflective-cap", type=int, default=REFLECTIVE_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    for name, func, helptext in (
        ("curvature", cmd_curvature, "per-edge Ollivier curvature"),
        ("betweenness", cmd_betweenness, "per-edge betweenness centrality"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func, workers=1)
        if name == "curvature":
            p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("reflective", help="reflectivity decision with per-edge witnesses")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reflective)

    p = sub.add_parser("sharpness", help="check the equality characterisation")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("fuzz", help="random connected graphs against the inequality")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=24)
    p.add_argument("--p-min", type=float, default=0.2)
    p.add_argument("--p-max", type=float, default=0.8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("product", help="Cartesian product of two edge-list graphs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ricbound: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
