"""Command-line interface.

Exit codes are shared by every command: 0 success, 1 a negative mathematical
answer (not a cograph, a violated coloring, not triangulatable), 2 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import formats
from .bench import DEFAULT_SIZES, format_csv, run_bench
from .coloring import color_cotree
from .cotree import Cotree, CotreeError, graph_of, is_skew, recognize, to_binary, to_canonical
from .formats import FormatError
from .gen import GenConfig, Shape, random_cotree
from .graph import ColoringDomainError, GraphError, verify_acyclic, verify_proper, verify_star
from .oracle import (BudgetExceeded, find_min_nontriangulatable_examples, oracle_chi_a,
                     oracle_chi_s, oracle_is_chordal, oracle_pathwidth,
                     oracle_phi_triangulatable, oracle_treewidth)
from .triangulate import triangulate_with_coloring, width_report

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write_file(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def _print_p4(quad) -> int:
    print("P4: %d %d %d %d" % tuple(quad))
    return NEGATIVE


def _cotree_input(args) -> Cotree | tuple:
    """Cotree from JSON (``--from-cotree``) or recognised from an edge list; P4 tuple otherwise."""
    text = _read(args.input)
    if getattr(args, "from_cotree", False):
        return formats.cotree_from_json(text)
    res = recognize(formats.parse_edge_list(text))
    return res.cotree if res.is_cograph else res.certificate


# -- commands ----------------------------------------------------------------------


def cmd_recognize(args) -> int:
    g = formats.parse_edge_list(_read(args.input))
    if args.dot:
        _write_file(args.dot, formats.to_dot(g))
    res = recognize(g)
    if not res.is_cograph:
        return _print_p4(res.certificate)
    print(formats.cotree_to_json(res.cotree))
    return OK


def cmd_cotree(args) -> int:
    text = _read(args.input)
    if args.from_graph:
        res = recognize(formats.parse_edge_list(text))
        if not res.is_cograph:
            return _print_p4(res.certificate)
        t = res.cotree
    else:
        t = formats.cotree_from_json(text)
    if args.skew:
        print(f"skew = {'true' if is_skew(to_canonical(t)) else 'false'}")
        return OK
    if args.to == "edges":
        sys.stdout.write(formats.write_edge_list(graph_of(t)))
    else:
        out = to_binary(t) if args.to == "binary" else to_canonical(t)
        print(formats.cotree_to_json(out))
    return OK


def cmd_color(args) -> int:
    t = _cotree_input(args)
    if not isinstance(t, Cotree):
        return _print_p4(t)
    _, stats, phi = color_cotree(t)
    print(f"chi_a = chi_s = {stats.root.chi_a}")
    sys.stdout.write(formats.write_coloring(phi))
    if args.dot:
        _write_file(args.dot, formats.to_dot(graph_of(t), phi))
    return OK


_VERIFIERS = {"proper": verify_proper, "acyclic": verify_acyclic, "star": verify_star}


def _graph_and_coloring(args):
    g = formats.parse_edge_list(_read(args.graph))
    phi = formats.parse_coloring(_read(args.coloring))
    if len(phi) != g.n:
        raise InputError(f"coloring covers {len(phi)} vertices, graph has {g.n}")
    return g, phi


def cmd_verify(args) -> int:
    g, phi = _graph_and_coloring(args)
    bad = _VERIFIERS[args.mode](g, phi)
    if bad is None:
        print("OK")
        return OK
    print(f"VIOLATION {bad.kind.value}: {' '.join(map(str, bad.witness))}")
    return NEGATIVE


def cmd_triangulate(args) -> int:
    g, phi = _graph_and_coloring(args)
    res = recognize(g)
    if not res.is_cograph:
        return _print_p4(res.certificate)
    if verify_proper(g, phi) is not None:
        raise InputError("coloring is not proper")
    bad = verify_acyclic(g, phi)
    if bad is not None:
        print("NOT PHI-TRIANGULATABLE")
        print(f"{bad.kind.value}: {' '.join(map(str, bad.witness))}")
        return NEGATIVE
    tri = triangulate_with_coloring(res.cotree, phi)
    print(f"added_edges = {len(tri.added_edges)}")
    for u, v in sorted(tri.added_edges):
        print(f"{u} {v}")
    sys.stdout.write(formats.write_triangulation(tri.base, tri.result))
    if args.dot:
        _write_file(args.dot, formats.to_dot(tri.result, phi, bold=tri.added_edges))
    return OK


def cmd_width(args) -> int:
    t = _cotree_input(args)
    if not isinstance(t, Cotree):
        return _print_p4(t)
    rep = width_report(t)
    print(f"chi_a = {rep.chi_a}")
    print(f"treewidth = {rep.treewidth}")
    print(f"pathwidth = {rep.pathwidth}")
    print(f"omega_of_triangulation = {rep.clique_number}")
    return OK


def cmd_gen(args) -> int:
    t = random_cotree(GenConfig(args.seed, args.n, args.p, Shape(args.shape)))
    if args.format == "edges":
        sys.stdout.write(formats.write_edge_list(graph_of(t)))
    else:
        print(formats.cotree_to_json(t))
    return OK


def cmd_oracle(args) -> int:
    if args.what == "minimal":
        found = find_min_nontriangulatable_examples(range(1, args.max_n + 1))
        for n in range(1, args.max_n + 1):
            print(f"n = {n}: {sum(1 for g, _ in found if g.n == n)} examples")
        for g, phi in found:
            print("# graph")
            sys.stdout.write(formats.write_edge_list(g))
            print("# coloring")
            sys.stdout.write(formats.write_coloring(phi))
        return OK
    g = formats.parse_edge_list(_read(args.graph))
    if args.what == "chi_a":
        print(f"chi_a = {oracle_chi_a(g)}")
    elif args.what == "chi_s":
        print(f"chi_s = {oracle_chi_s(g)}")
    elif args.what == "treewidth":
        print(f"treewidth = {oracle_treewidth(g)}")
    elif args.what == "pathwidth":
        print(f"pathwidth = {oracle_pathwidth(g)}")
    elif args.what == "chordal":
        chordal = oracle_is_chordal(g)
        print(f"chordal = {'true' if chordal else 'false'}")
        return OK if chordal else NEGATIVE
    else:
        if args.coloring is None:
            raise InputError("phi-triangulatable needs a coloring file")
        phi = formats.parse_coloring(_read(args.coloring), g.n)
        tri = oracle_phi_triangulatable(g, phi)
        if tri is None:
            print("NOT PHI-TRIANGULATABLE")
            return NEGATIVE
        sys.stdout.write(formats.write_triangulation(tri.base, tri.result))
    return OK


def _parse_sizes(text: str) -> list[int]:
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = (_parse_size(p) for p in part.split(".."))
            k = lo
            while k <= hi:
                sizes.append(k)
                k *= 2
        else:
            sizes.append(_parse_size(part))
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    return sizes


def _parse_size(text: str) -> int:
    try:
        if "^" in text:
            base, exp = text.split("^")
            return int(base) ** int(exp)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size {text!r}") from None


def cmd_bench(args) -> int:
    rows = run_bench(args.sizes, Shape(args.shape), args.repeats, args.seed, args.p)
    sys.stdout.write(format_csv(rows))
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot, title=f"{args.shape} cotrees, {args.repeats} repeats")
        print(f"wrote {args.plot}", file=sys.stderr)
    return OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cographcolor",
                                description="Optimal acyclic and star colorings of cographs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("recognize", help="cotree JSON for a cograph, or an induced P4")
    s.add_argument("input", nargs="?", help="edge list (default: stdin)")
    s.add_argument("--dot", metavar="FILE", help="also write the graph as DOT")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("cotree", help="convert cotree JSON")
    s.add_argument("input", nargs="?")
    s.add_argument("--to", choices=["canonical", "binary", "edges"], default="canonical")
    s.add_argument("--from-graph", action="store_true", help="input is an edge list")
    s.add_argument("--skew", action="store_true", help="report whether the cotree is skew")
    s.set_defaults(func=cmd_cotree)

    s = sub.add_parser("color", help="optimal acyclic/star coloring")
    s.add_argument("input", nargs="?")
    s.add_argument("--from-cotree", action="store_true", help="input is cotree JSON")
    s.add_argument("--dot", metavar="FILE")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a coloring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--mode", choices=sorted(_VERIFIERS), default="acyclic")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("triangulate", help="chordal supergraph keeping a coloring proper")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--dot", metavar="FILE")
    s.set_defaults(func=cmd_triangulate)

    s = sub.add_parser("width", help="chi_a, treewidth and pathwidth")
    s.add_argument("input", nargs="?")
    s.add_argument("--from-cotree", action="store_true")
    s.set_defaults(func=cmd_width)

    s = sub.add_parser("gen", help="random cotree")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, default=0.5, help="join probability")
    s.add_argument("--shape", choices=[x.value for x in Shape], default="random")
    s.add_argument("--format", choices=["json", "edges"], default="json")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", help="brute-force reference values for small graphs")
    s.add_argument("what", choices=["chi_a", "chi_s", "treewidth", "pathwidth", "chordal",
                                    "phi-triangulatable", "minimal"])
    s.add_argument("graph", nargs="?")
    s.add_argument("coloring", nargs="?")
    s.add_argument("--max-n", type=int, default=6, help="largest n for the minimal-example scan")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bench", help="time both coloring phases; CSV on stdout")
    s.add_argument("--sizes", type=_parse_sizes, default=list(DEFAULT_SIZES),
                   help="comma list; 2^16..2^20 doubles between the bounds")
    s.add_argument("--shape", choices=[x.value for x in Shape], default="balanced")
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--plot", metavar="FILE", help="render a matplotlib figure of the timings")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if args.command == "gen" and args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return INPUT_ERROR
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        sys.stdout = open(os.devnull, "w")
        return OK
    except (InputError, FormatError, GraphError, CotreeError, ColoringDomainError,
            BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
