"""``gradelift`` command line.

Exit codes: 0 success, 1 usage or input error, 2 computation error.  Errors
go to stderr as ``gradelift: error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from pathlib import Path

from . import __version__
from .errors import DegreeBoundTooSmall, GradeliftError, PresentationSyntaxError
from .graphs import build_chain_graph, build_ufnarovski, global_dim_bound, n_chains
from .groebner import complete, lm_obstructions, normal_form
from .io import (
    emit_dot,
    emit_report_json,
    emit_report_text,
    parse_polynomial,
    parse_presentation,
    print_basis,
    print_poly,
)
from .monoideal import hilbert_function, hilbert_series
from .transfer import analyze


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


def _bound(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("degree bound must be >= 1")
    return v


def _depth(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("depth must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gradelift", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gradelift {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="presentation file")
        p.add_argument("--degree-bound", type=_bound, default=8, metavar="D")
        p.add_argument("--depth", type=_depth, default=12, metavar="d")
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    common(sub.add_parser("gb", help="reduced Groebner basis and its status"))
    nf = sub.add_parser("nf", help="normal form of a polynomial")
    common(nf)
    nf.add_argument("--poly", required=True, help="polynomial in presentation syntax")
    for name, helptext in (("analyze", "property report"), ("report", "property report")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--json", action="store_true", help="JSON instead of text")
    common(sub.add_parser("hilbert", help="Hilbert function and series"))
    graph = sub.add_parser("graph", help="Ufnarovski graph")
    common(graph)
    graph.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    graph.add_argument("--chains", action="store_true", help="the chain graph instead")
    common(sub.add_parser("chains", help="n-chains and the global dimension bound"))
    return parser


def _run(args: argparse.Namespace, argv: list[str]) -> str:
    text = Path(args.input).read_text(encoding="utf-8")
    pres = parse_presentation(text)
    gens = pres.generators
    cmd = args.command
    if cmd == "gb":
        return print_basis(complete(pres, args.degree_bound)) + "\n"
    if cmd == "nf":
        f = parse_polynomial(args.poly, pres.order)
        g = complete(pres, args.degree_bound)
        return print_poly(normal_form(f, g.basis)) + "\n"
    if cmd in ("analyze", "report"):
        invocation = "gradelift " + shlex.join(argv)
        r = analyze(pres, args.degree_bound, args.depth, invocation=invocation)
        return emit_report_json(r) if args.json else emit_report_text(r)
    g = complete(pres, args.degree_bound)
    omega = lm_obstructions(g)
    status = f"status: {g.status_text()}\n"
    if cmd == "hilbert":
        counts = hilbert_function(omega, args.depth).counts
        return (
            "hilbert function: " + " ".join(map(str, counts)) + "\n"
            + f"hilbert series: {hilbert_series(omega)}\n" + status
        )
    if cmd == "graph":
        graph = build_chain_graph(omega) if args.chains else build_ufnarovski(omega)
        if args.dot:
            return emit_dot(graph)
        lines = [f"vertices: {', '.join(gens.format_word(v) for v in graph.vertices)}"]
        if args.chains:
            lines += [f"{gens.format_word(u)} -> {gens.format_word(v)}" for u, v in graph.edges]
        else:
            lines += [
                f"{gens.format_word(e.src)} -> {gens.format_word(e.dst)} [{gens.names[e.letter]}]"
                for e in graph.edges
            ]
        return "\n".join(lines) + "\n" + status
    if cmd == "chains":
        cg = build_chain_graph(omega)
        bound = global_dim_bound(cg)
        lines = []
        top = args.depth if bound.value is None else min(args.depth, bound.value)
        for n in range(-1, top + 1):
            chains = n_chains(cg, n).chains
            words = ", ".join(gens.format_word(w) for w in pres.order.sorted(chains))
            lines.append(f"C_{n} = {{{words}}}" if chains else f"C_{n} = {{}}")
            if not chains:
                break
        lines.append(f"gl.dim <= {bound.value}" if bound.value is not None else "gl.dim: no bound (chain graph has a cycle)")
        return "\n".join(lines) + "\n" + status
    raise UsageError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"gradelift: error: usage: {exc}", file=sys.stderr)
        return 1
    try:
        out = _run(args, argv)
    except UsageError as exc:
        print(f"gradelift: error: usage: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"gradelift: error: io: {exc}", file=sys.stderr)
        return 1
    except PresentationSyntaxError as exc:
        print(f"gradelift: error: {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except (DegreeBoundTooSmall, GradeliftError) as exc:
        print(f"gradelift: error: {exc.kind}: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
