"""Command-line front end.

Exit codes: 0 when the property holds or the operation succeeded, 1 when a
witness or counterexample was found (it is printed), 2 for input or usage
errors.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path
from typing import Optional

from . import cuts, cyclic, generators, io, verify
from .graph import Graph, GraphInputError, members

CATALOG_DIR_ENV = "FORESTCUT_CATALOG_DIR"
DEFAULT_SEED = 20250


class UsageError(Exception):
    pass


def _fmt(mask: int) -> str:
    return "{" + ", ".join(map(str, members(mask))) + "}"


def _family_params(family: str, params: list[str], base: Optional[str], policy: Optional[str],
                   jumps: Optional[str]) -> generators.FamilySpec:
    family = family.replace("-", "_")
    params = list(params)
    if family in ("k4_blowup", "octa_blowup"):
        if base is not None:
            params.insert(0, base)
        if policy is not None:
            params = params[:1] + [policy]
        if not params:
            raise UsageError(f"{family} needs a base graph (--base)")
    if family == "circulant" and jumps is not None:
        params += [j for j in jumps.replace(",", " ").split()]
    return generators.FamilySpec(family, tuple(params))


def _read_graph_file(path: str, fmt: Optional[str]) -> Graph:
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt is None:
        first = data.strip().splitlines()[0] if data.strip() else ""
        fmt = "edges" if " " in first else "g6"
    if fmt == "g6":
        return io.parse_graph6(data.strip())
    return io.parse_edge_list(data)


def _parse_inline_edges(spec: str, order: Optional[int]) -> Graph:
    edges = []
    for token in spec.replace(",", " ").split():
        u, _, v = token.partition("-")
        if not v:
            raise UsageError(f"bad edge token {token!r}; use u-v")
        edges.append((int(u), int(v)))
    if order is None:
        order = 1 + max((max(e) for e in edges), default=0)
    return Graph.from_edges(order, edges)


def _input_graph(args) -> Graph:
    if args.gen:
        return _family_params(args.gen[0], args.gen[1:], None, None, None).build()
    if args.g6 is not None:
        return io.parse_graph6(args.g6)
    if args.edges is not None:
        return _parse_inline_edges(args.edges, args.order)
    return _read_graph_file(args.file, args.format)


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", nargs="+", metavar="FAMILY", help="generator spec, e.g. --gen cycle 6")
    src.add_argument("--g6", help="inline graph6 string")
    src.add_argument("--edges", help="inline edge list, e.g. '0-1 1-2'")
    src.add_argument("--file", help="graph file (graph6 or edge list), '-' for stdin")
    p.add_argument("--order", type=int, help="vertex count for --edges")
    p.add_argument("--format", choices=["g6", "edges"], help="format of --file")


def _add_family(p: argparse.ArgumentParser) -> None:
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--base")
    p.add_argument("--policy")
    p.add_argument("--jumps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forestcut", description="forest cuts and k-cyclic graphs")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("cut", help="search for a forest or independent cut")
    p.add_argument("kind", choices=["forest", "independent"])
    _add_input(p)

    p = sub.add_parser("cyclic", help="test k-cyclicity")
    p.add_argument("--k", type=int, required=True)
    _add_input(p)

    p = sub.add_parser("connectivity", help="vertex connectivity")
    _add_input(p)

    p = sub.add_parser("gen", help="generate a family member")
    _add_family(p)
    p.add_argument("--out", choices=["g6", "edges"], default="g6")

    p = sub.add_parser("certify", help="build a family member and certify its profile")
    _add_family(p)

    p = sub.add_parser("scan", help="check bounds and lemmas over a catalog")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", help=f"graph catalog path ('-' for stdin); relative paths also tried under ${CATALOG_DIR_ENV}")
    src.add_argument("--enumerate", type=int, metavar="N", help="all connected graphs on 1..N vertices")
    src.add_argument("--random", type=int, metavar="COUNT", help="seeded random connected graphs (needs --order)")
    p.add_argument("--order", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--catalog-format", choices=[io.GRAPH6, io.EDGE_LIST_MULTI], default=io.GRAPH6)
    p.add_argument("--skip-bad", action="store_true", help="skip malformed catalog entries instead of aborting")
    p.add_argument("--bound", action="append", default=[])
    p.add_argument("--lemmas", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--records", help="write one JSON record per violation to this file")

    p = sub.add_parser("convert", help="convert between graph6 and edge lists")
    p.add_argument("--from", dest="src", choices=["g6", "edges"], required=True)
    p.add_argument("--to", dest="dst", choices=["g6", "edges"], required=True)
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    return parser


def _cmd_cut(args) -> int:
    g = _input_graph(args)
    finder = cuts.find_forest_cut if args.kind == "forest" else cuts.find_independent_cut
    w = finder(g)
    if w is None:
        print(f"no {args.kind} cut")
        return 0
    print(f"{args.kind} cut {_fmt(w.cut)} side {_fmt(w.side)}")
    return 1


def _cmd_cyclic(args) -> int:
    g = _input_graph(args)
    w = cyclic.cyclic_witness(g, args.k)
    if w is None:
        print(f"{args.k}-cyclic")
        return 0
    print(f"not {args.k}-cyclic: set {_fmt(w.violating_set)} neighborhood {_fmt(w.neighborhood)}")
    return 1


def _cmd_connectivity(args) -> int:
    print(f"κ={cuts.vertex_connectivity(_input_graph(args))}")
    return 0


def _cmd_gen(args) -> int:
    g = _family_params(args.family, args.params, args.base, args.policy, args.jumps).build()
    sys.stdout.write(io.write_graph6(g) + "\n" if args.out == "g6" else io.write_edge_list(g))
    return 0


def _cmd_certify(args) -> int:
    spec = _family_params(args.family, args.params, args.base, args.policy, args.jumps)
    cert = generators.certify(spec.build(), spec.expected())
    print(cert.summary())
    for problem in cert.mismatches:
        print(f"MISMATCH {problem}")
    return 0 if cert.ok else 1


def _catalog_path(path: str) -> str:
    if path == "-" or Path(path).exists() or os.path.isabs(path):
        return path
    root = os.environ.get(CATALOG_DIR_ENV)
    if root and (Path(root) / path).exists():
        return str(Path(root) / path)
    return path


def _scan_source(args):
    if args.catalog is not None:
        return io.stream_catalog(_catalog_path(args.catalog), args.catalog_format,
                                 "skip" if args.skip_bad else "abort")
    if args.enumerate is not None:
        return (g for n in range(1, args.enumerate + 1) for g in generators.enumerate_connected(n))
    if args.order is None:
        raise UsageError("--random needs --order")
    rng = random.Random(args.seed)
    return (generators.random_connected(args.order, rng) for _ in range(args.random))


def _cmd_scan(args) -> int:
    if not args.bound and not args.lemmas:
        raise UsageError("scan needs at least one --bound or --lemmas")
    bounds = [verify.get_bound(b) for b in args.bound]
    source = _scan_source(args)
    report = verify.scan(source, bounds, lemma_checks=args.lemmas, workers=args.workers)
    for line in report.summary_lines():
        print(line)
    diagnostics = getattr(source, "diagnostics", [])
    for d in diagnostics:
        print(f"skipped entry {d.index} at byte {d.offset}: {d.message}")
    if args.records:
        with open(args.records, "w") as fh:
            report.write_records(fh)
    return 0 if report.ok else 1


def _cmd_convert(args) -> int:
    fmt = io.GRAPH6 if args.src == "g6" else io.EDGE_LIST_MULTI
    graphs = (e.graph for e in io.stream_catalog(args.input, fmt))
    dst = io.GRAPH6 if args.dst == "g6" else io.EDGE_LIST_MULTI
    if args.output == "-":
        io.write_catalog(graphs, sys.stdout, dst)
    else:
        with open(args.output, "w") as out:
            io.write_catalog(graphs, out, dst)
    return 0


COMMANDS = {
    "cut": _cmd_cut,
    "cyclic": _cmd_cyclic,
    "connectivity": _cmd_connectivity,
    "gen": _cmd_gen,
    "certify": _cmd_certify,
    "scan": _cmd_scan,
    "convert": _cmd_convert,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, GraphInputError, io.Graph6Error, io.EdgeListError, io.CatalogError,
            cuts.SearchLimitError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

