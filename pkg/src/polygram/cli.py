"""Command line interface.

Subcommands: derive, gamma, table, oracle, verify, classical.  Exit codes:
0 success, 1 verification failure, 2 usage or parse errors.  Output for a
fixed invocation is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys

from . import oracles
from .classical import (chebyshev_t, chebyshev_u, legendre_like, narayana_like,
                        secant_derivative_poly, tangent_derivative_poly)
from .gamma import FAMILIES, h_to_gamma
from .grammar import DerivOp, iterate_operator
from .parser import ParseError, parse_grammar, parse_poly
from .triangles import bfile_lines, lookup_triangle, triangle_json_dict
from .verify import TARGETS, run_all, run_target

__all__ = ["build_parser", "entry", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polygram",
        description="Exact grammar-derivative calculus with gamma-vector, "
                    "triangle, oracle and verification commands.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="iterate a derivative operator over a grammar")
    p.add_argument("--grammar", required=True,
                   help="rule text like 'u -> u*v; v -> 4*u^2', or @NAME with --config")
    p.add_argument("--start", required=True, help="starting polynomial expression")
    p.add_argument("--op", default="D", help="D (default), preD:<letter> or postD:<letter>")
    p.add_argument("--n", type=int, required=True, help="number of applications")
    p.add_argument("--config", help="INI file of named grammars (key 'rules' per section)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gamma", help="h-row and gamma-row of a complex family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table", help="rows of a named integer triangle")
    p.add_argument("--name", required=True, help="triangle name or OEIS id alias")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "bfile"), default="text")

    p = sub.add_parser("oracle", help="run a brute-force enumerator")
    p.add_argument("--which", required=True,
                   choices=("descents-a", "descents-b", "alternating-a",
                            "alternating-b", "motzkin-up", "left-h"))
    p.add_argument("--n", type=int, required=True, help="size (or path length)")
    p.add_argument("--k", type=int, default=None,
                   help="single histogram entry instead of the whole row")

    p = sub.add_parser("verify", help="run a named verification target")
    p.add_argument("--target", required=True, choices=sorted(TARGETS) + ["all"])
    p.add_argument("--n-max", type=int, default=None,
                   help="sweep bound (default: per-target budget)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classical", help="print a classical polynomial family member")
    p.add_argument("--which", required=True, choices=("P", "Q", "L", "N", "T", "U"),
                   help="P/Q tangent and secant derivative polynomials, "
                        "L/N Legendre- and Narayana-type, T/U Chebyshev")
    p.add_argument("--n", type=int, required=True)
    return parser


def _dump_json(payload) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _load_grammar_text(args) -> str:
    text = args.grammar
    if not text.startswith("@"):
        return text
    if not args.config:
        raise ValueError(f"grammar reference {text!r} needs --config")
    cfg = configparser.ConfigParser()
    with open(args.config, encoding="utf-8") as fh:
        cfg.read_file(fh)
    section = text[1:]
    if section not in cfg or "rules" not in cfg[section]:
        raise ValueError(f"config has no grammar named {section!r}")
    return cfg[section]["rules"]


def _cmd_derive(args) -> int:
    grammar = parse_grammar(_load_grammar_text(args))
    start = parse_poly(args.start, grammar.letters)
    op = DerivOp.parse(args.op)
    result = iterate_operator(grammar, op, start, args.n)
    if args.format == "json":
        _dump_json(result.to_json_dict())
    else:
        print(result)
    return 0


def _cmd_gamma(args) -> int:
    h_of, triangle = FAMILIES[args.family]
    h = h_of(args.n)
    gamma = h_to_gamma(h)
    expected = triangle.row(args.n)
    if list(gamma.gammas) != expected:
        print(f"error: extracted gamma {gamma} does not match "
              f"the {triangle.name} row {expected}", file=sys.stderr)
        return 1
    if args.format == "json":
        _dump_json({
            "family": args.family,
            "n": args.n,
            "h": [str(c) for c in h.coeffs],
            "gamma": [str(g) for g in gamma.gammas],
        })
    else:
        print(f"h: {h}")
        print(f"gamma: {gamma}")
    return 0


def _cmd_table(args) -> int:
    if args.rows < 1:
        raise ValueError(f"--rows must be >= 1, got {args.rows}")
    triangle = lookup_triangle(args.name)
    if args.format == "bfile":
        for line in bfile_lines(triangle, args.rows):
            print(line)
    elif args.format == "json":
        _dump_json(triangle_json_dict(triangle, args.rows))
    else:
        for n in range(1, args.rows + 1):
            print(" ".join(str(v) for v in triangle.row(n)))
    return 0


def _cmd_oracle(args) -> int:
    which = args.which
    if which == "alternating-a":
        print(oracles.count_alternating(args.n, "A"))
        return 0
    if which == "alternating-b":
        print(oracles.count_alternating(args.n, "B"))
        return 0
    values = {
        "descents-a": oracles.descent_distribution,
        "descents-b": oracles.descent_b_distribution,
        "motzkin-up": oracles.motzkin_up_histogram,
        "left-h": oracles.left_factor_h_histogram,
    }[which](args.n)
    if args.k is not None:
        print(values[args.k] if 0 <= args.k < len(values) else 0)
    else:
        print(" ".join(str(v) for v in values))
    return 0


def _cmd_verify(args) -> int:
    if args.target == "all":
        reports = run_all(args.n_max)
        ok = all(r.ok for r in reports)
        if args.format == "json":
            _dump_json({"target": "all", "ok": ok,
                        "targets": [r.to_json_dict() for r in reports]})
        else:
            for report in reports:
                for line in report.lines():
                    print(line)
            print(f"all: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    report = run_target(args.target, args.n_max)
    if args.format == "json":
        _dump_json(report.to_json_dict())
    else:
        for line in report.lines():
            print(line)
    return 0 if report.ok else 1


def _cmd_classical(args) -> int:
    family = {
        "P": tangent_derivative_poly,
        "Q": secant_derivative_poly,
        "L": legendre_like,
        "N": narayana_like,
        "T": chebyshev_t,
        "U": chebyshev_u,
    }[args.which]
    print(family(args.n))
    return 0


_HANDLERS = {
    "derive": _cmd_derive,
    "gamma": _cmd_gamma,
    "table": _cmd_table,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "classical": _cmd_classical,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
