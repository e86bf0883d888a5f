"""Command-line entry point: ``pwtri {triangulate,generate,pathwidth,validate}``."""

from __future__ import annotations

import argparse
import logging
import sys

from .generators import FAMILIES, generate
from .io import FormatError, emit_decomposition, emit_graph, parse_decomposition, parse_graph
from .oracle import OracleSizeError, exact_pathwidth, node_cap
from .pathdecomp import DecompositionError
from .pipeline import MODES, run_pipeline
from .planar import NotApplicableError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_triangulate(args) -> int:
    g = parse_graph(_read(args.input))
    if args.td:
        p = parse_decomposition(_read(args.td))
    else:
        if g.num_vertices() > node_cap():
            print(f"error: {g.num_vertices()} vertices exceed the oracle cap {node_cap()}; pass --td", file=sys.stderr)
            return EXIT_INPUT
        p = exact_pathwidth(g).witness
    g_out, p_out, report = run_pipeline(g, p, mode=args.mode, debug_tokens=args.debug_tokens)
    _write(args.output, emit_graph(g_out))
    _write(args.output_td, emit_decomposition(p_out, n=g_out.num_vertices()))
    text = report.to_text()
    if args.report:
        _write(args.report, text)
    else:
        sys.stderr.write(text)
    return EXIT_OK if report.all_green else EXIT_FAIL


def cmd_generate(args) -> int:
    g = generate(args.family, args.n, args.seed)
    _write(args.output, emit_graph(g))
    return EXIT_OK


def cmd_pathwidth(args) -> int:
    g = parse_graph(_read(args.input))
    res = exact_pathwidth(g)
    print(res.width)
    if args.output_td:
        _write(args.output_td, emit_decomposition(res.witness, n=g.num_vertices()))
    return EXIT_OK


def cmd_validate(args) -> int:
    g = parse_graph(_read(args.input))
    p = parse_decomposition(_read(args.td))
    if p.validate(g):
        print(f"valid width {p.width}")
        return EXIT_OK
    print("invalid")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pwtri", description="Triangulate planar graphs with bounded pathwidth growth.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log warnings from the token ledger")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("triangulate", help="triangulate (or maximalize) a graph and emit a decomposition")
    t.add_argument("--input", required=True, help="graph file, '-' for stdin")
    t.add_argument("--td", help="path decomposition of the input; computed exactly when absent")
    t.add_argument("--mode", choices=MODES, default="auto")
    t.add_argument("--report", help="write the report here instead of stderr")
    t.add_argument("--debug-tokens", action="store_true", help="audit every step with the token ledger")
    t.add_argument("--output", help="output graph file (default stdout)")
    t.add_argument("--output-td", help="output decomposition file (default stdout)")
    t.set_defaults(func=cmd_triangulate)

    gen = sub.add_parser("generate", help="write a generated instance")
    gen.add_argument("--family", required=True, choices=sorted(FAMILIES))
    gen.add_argument("--n", type=int, required=True, help="size (side length for grids)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output")
    gen.set_defaults(func=cmd_generate)

    pw = sub.add_parser("pathwidth", help="exact pathwidth of a small graph")
    pw.add_argument("--input", required=True)
    pw.add_argument("--output-td", help="also write an optimal decomposition")
    pw.set_defaults(func=cmd_pathwidth)

    va = sub.add_parser("validate", help="check a decomposition against a graph")
    va.add_argument("--input", required=True)
    va.add_argument("--td", required=True)
    va.set_defaults(func=cmd_validate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (FormatError, DecompositionError, OracleSizeError, NotApplicableError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
