"""Command-line front end.

One subcommand per library operation, batch-friendly: code input inline or
via --file, output as text (default), JSON, or DOT where a graph is
produced.  Exit status: 0 success, 1 usage or parse error, 2 precondition
violation (e.g. wrong component count), 3 budget exhausted.  Stochastic
subcommands require an explicit --seed; outputs are byte-identical for
identical argv and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, brackets, moves, parity
from .diagrams import (
    BudgetError,
    CodeError,
    GaussCode,
    PreconditionError,
    canonicalize,
    component_count,
    enumerate_codes,
    parse_gauss_code,
    render_gauss_code,
    to_framed,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3


def _read_input(args) -> str:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read()
    if getattr(args, "code", None) is not None:
        return args.code
    raise CodeError("no input: pass CODE inline or --file PATH")


def _input_code(args) -> GaussCode:
    return parse_gauss_code(_read_input(args))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _sum_output(args, command: str, s: brackets.FormalSum) -> None:
    terms = [str(t) for t in s.sorted_terms()]
    if args.format == "json":
        print(json.dumps(terms))
    else:
        if not terms:
            print("0")
        for t in terms:
            print(t)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_parse(args) -> int:
    code = _input_code(args)
    _emit(args, {
        "command": "parse",
        "code": render_gauss_code(code),
        "components": code.component_count,
        "chords": code.chord_count,
        "free_loops": code.free_loops,
    }, [
        render_gauss_code(code),
        f"components: {code.component_count}",
        f"chords: {code.chord_count}",
        f"free_loops: {code.free_loops}",
    ])
    return EXIT_OK


def _cmd_canon(args) -> int:
    can = canonicalize(_input_code(args))
    _emit(args, {"command": "canon", "code": str(can)}, [str(can)])
    return EXIT_OK


def _cmd_components(args) -> int:
    code = _input_code(args)
    _emit(args, {"command": "components", "count": code.component_count},
          [str(code.component_count)])
    return EXIT_OK


def _cmd_reduce(args) -> int:
    reduced, saw = moves.reduce_r2(_input_code(args))
    _emit(args, {"command": "reduce", "code": str(reduced), "saw_free_loop": saw},
          [str(reduced), f"saw_free_loop: {_bool(saw)}"])
    return EXIT_OK


def _cmd_parity(args) -> int:
    code = _input_code(args)
    pa = parity.parity(code, args.rule)
    items = [(str(lab), "odd" if pa.is_odd(lab) else "even") for lab in pa.chords]
    _emit(args, {"command": "parity", "rule": args.rule, "parities": dict(items)},
          [f"{lab}: {val}" for lab, val in items])
    return EXIT_OK


def _cmd_orientable(args) -> int:
    ok = parity.source_sink_orientable(to_framed(_input_code(args)))
    _emit(args, {"command": "orientable", "orientable": ok}, [_bool(ok)])
    return EXIT_OK


def _graph_payload(g: parity.InterlacementGraph):
    edges = sorted(sorted((str(a), str(b))) for a, b in
                   (tuple(e) for e in g.edges))
    return [str(v) for v in g.vertices], [list(e) for e in edges]


def _cmd_interlacement(args) -> int:
    g = parity.interlacement(_input_code(args))
    verts, edges = _graph_payload(g)
    if args.format == "dot":
        print(g.to_dot())
    else:
        _emit(args, {"command": "interlacement", "vertices": verts, "edges": edges},
              ["vertices: " + " ".join(verts)] + [f"{a} {b}" for a, b in edges])
    return EXIT_OK


def _cmd_delta(args) -> int:
    _sum_output(args, "delta", brackets.delta(_input_code(args)))
    return EXIT_OK


def _cmd_abracket(args) -> int:
    _sum_output(args, "abracket", brackets.alex_bracket(_input_code(args)))
    return EXIT_OK


def _cmd_kbracket(args) -> int:
    _sum_output(args, "kbracket", brackets.kauffman_bracket(_input_code(args)))
    return EXIT_OK


def _cmd_kdelta(args) -> int:
    _sum_output(args, "kdelta", brackets.kdelta(_input_code(args)))
    return EXIT_OK


def _cmd_bound(args) -> int:
    code = _input_code(args)
    k = component_count(to_framed(code))
    if k == 1:
        cert = analysis.lower_bound_knot(code)
    elif k == 2:
        cert = analysis.lower_bound_link2(code)
    else:
        raise PreconditionError(f"bounds exist for 1- or 2-component diagrams, found {k}")
    term = str(cert.witness_term) if cert.witness_term is not None else None
    _emit(args, {
        "command": "bound",
        "diagram": str(cert.diagram),
        "bound": cert.bound,
        "tight": cert.tight,
        "witness": cert.witness_invariant,
        "term": term,
    }, [
        f"diagram: {cert.diagram}",
        f"bound: {cert.bound}",
        f"tight: {_bool(cert.tight)}",
        f"witness: {cert.witness_invariant}",
        f"term: {term if term is not None else '-'}",
    ])
    return EXIT_OK


def _cmd_realizable(args) -> int:
    g = analysis.parse_adjacency(_read_input(args))
    witness = analysis.realizable(g)
    _emit(args, {
        "command": "realizable",
        "realizable": witness is not None,
        "witness": str(witness) if witness is not None else None,
    }, [str(witness) if witness is not None else "not realizable"])
    return EXIT_OK


def _cmd_bfs(args) -> int:
    a = parse_gauss_code(args.code)
    b = parse_gauss_code(args.code2)
    report = analysis.bfs_equivalent(a, b, args.max_vertices, args.max_depth)
    path = list(report.path) if report.path is not None else None
    _emit(args, {
        "command": "bfs",
        "reached": report.reached,
        "visited": report.visited,
        "min_vertices": report.min_vertices,
        "depth": report.depth_reached,
        "path": path,
    }, [
        f"reached: {_bool(bool(report.reached))}",
        f"visited: {report.visited}",
        f"min_vertices: {report.min_vertices}",
        f"depth: {report.depth_reached}",
    ] + ([f"path: {' ; '.join(path)}"] if path else []))
    return EXIT_OK if report.reached else EXIT_BUDGET


def _cmd_enumerate(args) -> int:
    codes = [str(c) for c in enumerate_codes(args.n, args.k)]
    if args.format == "json":
        print(json.dumps({"command": "enumerate", "codes": codes}, sort_keys=True))
    else:
        for c in codes:
            print(c)
    return EXIT_OK


def _cmd_random(args) -> int:
    code = analysis.random_diagram(args.n, args.k, args.seed)
    if args.moves:
        code = analysis.random_moves(code, args.moves, args.max_vertices, args.seed + 1)
    _emit(args, {"command": "random", "code": render_gauss_code(code)},
          [render_gauss_code(code)])
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="freeknot", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, handler, help_, code_arg=True, fmt=("text", "json")):
        p = sub.add_parser(name, help=help_)
        if code_arg:
            p.add_argument("code", nargs="?", help="Gauss code (or use --file)")
            p.add_argument("--file", help="read the input from a file")
        p.add_argument("--format", choices=fmt, default="text")
        p.set_defaults(handler=handler)
        return p

    add("parse", _cmd_parse, "validate a code and echo its shape")
    add("canon", _cmd_canon, "canonical form of a code")
    add("components", _cmd_components, "number of unicursal components")
    add("reduce", _cmd_reduce, "unique R2-irreducible representative")
    p = add("parity", _cmd_parity, "odd/even marking of every chord")
    p.add_argument("--rule", choices=(parity.GAUSSIAN, parity.COMPONENT), required=True)
    add("orientable", _cmd_orientable, "source-sink orientability")
    add("interlacement", _cmd_interlacement, "chord interlacement graph",
        fmt=("text", "json", "dot"))
    add("delta", _cmd_delta, "two-component splitting sum")
    add("abracket", _cmd_abracket, "even-smoothing bracket of a knot diagram")
    add("kbracket", _cmd_kbracket, "even-smoothing bracket of a 2-component diagram")
    add("kdelta", _cmd_kdelta, "bracket composed along the splitting sum")
    add("bound", _cmd_bound, "minimality certificate from the state sums")
    add("realizable", _cmd_realizable, "witness diagram for an abstract graph (adjacency lines 'u: v w')")

    p = add("bfs", _cmd_bfs, "bounded reachability between two codes", code_arg=False)
    p.add_argument("code", help="start Gauss code")
    p.add_argument("code2", help="target Gauss code")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-depth", type=int, required=True)

    p = add("enumerate", _cmd_enumerate, "all diagram classes with n chords, k components",
            code_arg=False)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = add("random", _cmd_random, "seeded random diagram, optionally scrambled by moves",
            code_arg=False)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--moves", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=12)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except (PreconditionError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
