"""Command-line front end.

Exit codes: 0 success / identity verified, 1 verification failed,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chromatic import (
    exhaustive_verify,
    strong_chromatic_polynomial,
    verify_strong_reciprocity,
    verify_weak_reciprocity,
    weak_chromatic_polynomial,
)
from .enumeration import count_intercompatible
from .errors import BoundExceededError, ChromixError, ParseError, PosetAxiomError, PreconditionError
from .graph import is_acyclic_orientation, orientations
from .parsing import parse_graph, parse_poset
from .polynomial import format_polynomial, format_rational, serialize_rational
from .poset import complementary_labeling, order_polynomial, verify_stanley_order
from .report import THEOREMS

THEOREM_ALIASES = {"weak": "weak-reciprocity", "strong": "strong-reciprocity"}

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ChromixError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args):
    return parse_graph(_read(args.file), args.format)


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_poly(args) -> int:
    g = _load_graph(args)
    p = strong_chromatic_polynomial(g) if args.strong else weak_chromatic_polynomial(g)
    values = [(k, p(k)) for k in range(1, g.order + 2)]
    text = [format_polynomial(p), "", "k  value"]
    text += [f"{k}  {format_rational(v)}" for k, v in values]
    payload = {
        "command": "poly",
        "input": args.file,
        "polynomial": [serialize_rational(c) for c in p.coefficients],
        "values": [[k, serialize_rational(v)] for k, v in values],
    }
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_eval(args) -> int:
    g = _load_graph(args)
    p = strong_chromatic_polynomial(g) if args.strong else weak_chromatic_polynomial(g)
    value = p(args.k)
    signed = (-1) ** g.order * value
    text = [format_rational(value)]
    if args.signed:
        text.append(f"signed: {format_rational(signed)}")
    payload = {"command": "eval", "input": args.file, "k": args.k, "value": serialize_rational(value)}
    if args.signed:
        payload["signed"] = serialize_rational(signed)
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_orientations(args) -> int:
    g = _load_graph(args)
    rows = []
    for i, o in enumerate(orientations(g), start=1):
        acyclic = is_acyclic_orientation(o)
        if args.acyclic_only and not acyclic:
            continue
        row = {"index": i, "pairs": o.describe(), "acyclic": acyclic}
        if args.k is not None:
            row["intercompatible"] = count_intercompatible(g, o, args.k)
        rows.append(row)
    header = ["#", "acyclic"] + (["intercompatible"] if args.k is not None else []) + ["pairs  (=> arc, -> oriented edge)"]
    lines = ["  ".join(header)]
    for r in rows:
        cells = [f"G{r['index']}", "yes" if r["acyclic"] else "no"]
        if args.k is not None:
            cells.append(str(r["intercompatible"]))
        cells.append(r["pairs"])
        lines.append("  ".join(cells))
    _emit(args, {"command": "orientations", "input": args.file, "rows": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_reciprocity(args) -> int:
    g = _load_graph(args)
    if args.strong:
        report = verify_strong_reciprocity(g, args.kmax)
    else:
        report = verify_weak_reciprocity(g, args.kmax, force=args.force)
    payload = {
        "command": "reciprocity",
        "input": args.file,
        "rows": [r.to_json() for r in report.rows],
        "verdict": report.verdict,
    }
    _emit(args, payload, report.format_table())
    return EXIT_OK if report.verdict else EXIT_FAILED


def cmd_order_poly(args) -> int:
    w = parse_poset(_read(args.file))
    p = w.poset
    omega = order_polynomial(p, w)
    omega_bar = order_polynomial(p, complementary_labeling(w))
    report = verify_stanley_order(p, w, args.kmax)
    text = [
        f"labeling:   {' '.join(f'{e}={w[e]}' for e in p.elements)}",
        f"omega:      {format_polynomial(omega)}",
        f"complement: {format_polynomial(omega_bar)}",
        "",
        report.format_table(),
    ]
    payload = {
        "command": "order-poly",
        "input": args.file,
        "polynomial": [serialize_rational(c) for c in omega.coefficients],
        "complement": [serialize_rational(c) for c in omega_bar.coefficients],
        "rows": [r.to_json() for r in report.rows],
        "verdict": report.verdict,
    }
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if report.verdict else EXIT_FAILED


def cmd_verify(args) -> int:
    theorem = THEOREM_ALIASES.get(args.theorem, args.theorem)
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from weak, strong, {', '.join(THEOREMS)}")
    summary = exhaustive_verify(args.n, args.kmax, theorem)
    payload = {"command": "verify", "input": f"n={args.n}", "verdict": summary.ok, **summary.to_json()}
    _emit(args, payload, summary.format())
    return EXIT_OK if summary.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromix", description="Chromatic polynomials and reciprocity checks for mixed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("auto", "lines", "dot"), default="auto")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    p = graph_command("poly", cmd_poly, "print the weak (or strong) chromatic polynomial")
    p.add_argument("--strong", action="store_true")

    p = graph_command("eval", cmd_eval, "evaluate the chromatic polynomial at an integer")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--signed", action="store_true", help="also print (-1)^|V| times the value")

    p = graph_command("orientations", cmd_orientations, "list orientations and their acyclicity")
    p.add_argument("--acyclic-only", action="store_true")
    p.add_argument("-k", type=int, help="add a column of intercompatible k-coloring counts")

    p = graph_command("reciprocity", cmd_reciprocity, "check a reciprocity theorem for k = 1..kmax")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--force", action="store_true", help="run the weak check on a graph that is not acyclic")

    p = sub.add_parser("order-poly", help="order polynomials of a labeled poset")
    p.add_argument("file", help="poset file, or - for stdin")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_order_poly)

    p = sub.add_parser("verify", help="sweep a theorem over every small labeled instance")
    p.add_argument("--exhaustive", action="store_true", help="accepted for clarity; sweeps are always exhaustive")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--theorem", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kmax", 1) < 1:
        parser.error("--kmax must be positive")
    if args.command == "orientations" and args.k is not None and args.k < 1:
        parser.error("-k must be positive")
    try:
        return args.func(args)
    except (ParseError, PosetAxiomError) as exc:
        print(f"chromix: {args.file}: {exc}", file=sys.stderr)
    except (PreconditionError, BoundExceededError, UsageError) as exc:
        print(f"chromix: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
