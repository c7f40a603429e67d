"""Command-line interface: ``cyclic-coloring <subcommand> ...``.

Exit codes: 0 success, 1 domain error (infeasible, not in class, bad
input, violations), 2 search budget exhausted, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import colorer, discharging, generator, oracle
from .coloring import verify
from .configurations import DETECTORS, Kind, default_D, iter_configurations
from .plane_graph import PlaneGraph
from .plg import (
    PLGSemanticError,
    PLGSyntaxError,
    emit_coloring,
    emit_dot,
    emit_plg,
    parse_coloring,
    parse_plg,
)

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    pass


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _read_graph(path: Optional[str]) -> PlaneGraph:
    text = _read_text(path)
    try:
        return parse_plg(text)
    except (PLGSyntaxError, PLGSemanticError) as exc:
        raise InputError(f"{path or '-'}: {exc}") from exc


# -- color ---------------------------------------------------------------------------


def _color_one(path: Optional[str], opts: dict) -> tuple[int, str, str]:
    """Returns (exit code, stdout text, stderr text) so workers stay isolated."""
    try:
        G = _read_graph(path)
        res = colorer.cyclic_color(G, **opts)
    except InputError as exc:
        return EXIT_DOMAIN, "", f"{exc}\n"
    except (colorer.NotInClass, colorer.Infeasible) as exc:
        return EXIT_DOMAIN, "", f"{path or '-'}: {exc}\n"
    except colorer.BudgetExceeded as exc:
        return EXIT_BUDGET, "", f"{path or '-'}: {exc}\n"
    trace = "".join(f"# {s.line()}\n" for s in res.trace)
    return EXIT_OK, trace, emit_coloring(res.colors)


def cmd_color(args: argparse.Namespace) -> int:
    opts = dict(colors=args.colors, force=args.force, strategy=args.strategy,
                node_budget=args.nodes)
    paths: list[Optional[str]] = list(args.graphs) or [None]
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_color_one, paths, [opts] * len(paths)))
    else:
        results = [_color_one(p, opts) for p in paths]
    code = EXIT_OK
    for path, (rc, trace, body) in zip(paths, results):
        if rc != EXIT_OK:
            sys.stderr.write(body)
            code = max(code, rc)
            continue
        if len(paths) > 1:
            sys.stdout.write(f"# file {path}\n")
        if args.trace:
            sys.stdout.write(trace)
        sys.stdout.write(body)
    return code


# -- verify / oracle -------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    try:
        colors = parse_coloring(_read_text(args.coloring), G.vertex_count)
    except PLGSyntaxError as exc:
        raise InputError(f"{args.coloring}: {exc}") from exc
    k = args.colors if args.colors is not None else default_D(G) + 1
    bad = verify(G, colors, k)
    for v in bad:
        print(v)
    if bad:
        return EXIT_DOMAIN
    print(f"ok {k}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    try:
        res = oracle.cyclic_chromatic_number(G, cap=args.cap, deadline=args.time,
                                             node_budget=args.nodes)
    except oracle.Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except oracle.Exceeded as exc:
        print(f"bounds {exc.best_lower} {exc.best_upper}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"chi {res.chromatic_number}")
    print(f"nodes {res.nodes}")
    sys.stdout.write(emit_coloring(res.coloring))
    return EXIT_OK


# -- audit / detect --------------------------------------------------------------------


def cmd_audit(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    try:
        rep = discharging.audit(G, args.D)
    except discharging.PreconditionFailed as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"D {rep.D}")
    print(f"total initial {rep.initial_total} final {rep.final_total}")
    for entry in rep.entries:
        print(entry.line())
    print(f"unexplained {len(rep.unexplained_negatives)}")
    return EXIT_DOMAIN if rep.unexplained_negatives else EXIT_OK


def cmd_detect(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    D = args.D if args.D is not None else default_D(G)
    if args.kind:
        matches = DETECTORS[Kind(args.kind)](G, D)
    else:
        matches = list(iter_configurations(G, D))
    for m in matches:
        print(m.describe())
    print(f"matches {len(matches)}")
    return EXIT_OK


# -- gen / export ----------------------------------------------------------------------


def _write(out: Path, name: str, G: PlaneGraph, comment: str) -> str:
    text = emit_plg(G, comment)
    (out / f"{name}.plg").write_text(text, encoding="ascii")
    return text


def cmd_gen(args: argparse.Namespace) -> int:
    if args.what == "wheel":
        if args.n is None or args.n < 3:
            print("gen wheel needs -n >= 3", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(emit_plg(generator.wheel(args.n), f"wheel {args.n}"))
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = []
    if args.what == "fixtures":
        for name, G in generator.fixtures().items():
            _write(out, name, G, name)
            manifest.append({"name": name, "params": {}, "seed": None,
                             "checksum": generator.CorpusEntry(name, G, 0, {}).checksum()})
    else:
        for entry in generator.class_corpus(args.count, args.seed, args.max_vertices):
            _write(out, entry.name, entry.graph, entry.name)
            manifest.append({"name": entry.name, "params": entry.params,
                             "seed": entry.seed, "checksum": entry.checksum()})
    with open(out / "manifest.jsonl", "w", encoding="ascii") as fh:
        for row in manifest:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    print(f"wrote {len(manifest)} graphs to {out}")
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    sys.stdout.write(emit_dot(_read_graph(args.graph)))
    return EXIT_OK


# -- wiring ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclic-coloring", description="Cyclic colorings of plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("color", help="color PLG graphs with max(D*,5)+1 colors")
    c.add_argument("graphs", nargs="*", help="PLG files (default: stdin)")
    c.add_argument("--colors", type=int, help="palette size K")
    c.add_argument("--force", action="store_true", help="accept graphs outside the class")
    c.add_argument("--strategy", choices=colorer.STRATEGIES, default="auto")
    c.add_argument("--trace", action="store_true", help="print the step log as comments")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--nodes", type=int, default=10**7, help="fallback search node budget")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring file against a graph")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--colors", type=int)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact cyclic chromatic number")
    o.add_argument("graph", nargs="?")
    o.add_argument("--cap", type=int)
    o.add_argument("--nodes", type=int)
    o.add_argument("--time", type=float, help="seconds")
    o.set_defaults(func=cmd_oracle)

    a = sub.add_parser("audit", help="discharging audit")
    a.add_argument("graph", nargs="?")
    a.add_argument("--D", type=int)
    a.set_defaults(func=cmd_audit)

    d = sub.add_parser("detect", help="list reducible configurations")
    d.add_argument("graph", nargs="?")
    d.add_argument("--D", type=int)
    d.add_argument("--kind", choices=[k.value for k in Kind])
    d.set_defaults(func=cmd_detect)

    g = sub.add_parser("gen", help="generate graphs")
    g.add_argument("what", choices=("wheel", "fixtures", "corpus"))
    g.add_argument("-n", type=int, help="wheel rim length")
    g.add_argument("--out", default=".")
    g.add_argument("--count", type=int, default=200)
    g.add_argument("--seed", type=int, default=20100101)
    g.add_argument("--max-vertices", type=int, default=80)
    g.set_defaults(func=cmd_gen)

    x = sub.add_parser("export-dot", help="Graphviz export with face comments")
    x.add_argument("graph", nargs="?")
    x.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(exc, file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
