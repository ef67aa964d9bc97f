"""Command-line front end.

Exit status: 0 on success, 1 on usage errors (bad flags, unreadable graph,
unparsable word), 2 on mathematical-domain errors and exceeded resource caps.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import GraphError, NotLyndon, RaagError, WordSyntaxError
from .graph import DEFAULT_MAX_VERTICES, parse_graph
from .groupwords import format_word, normal_form, parse_word
from .liealg import lyndon_basis, structure_constants
from .lyndon import enumerate_lyndon, is_lyndon_element, lyndon_tree
from .magnus import AtLeast, filtration_degree, lcs_coordinates, magnus
from .series import witt_product_check
from .tensor import DEFAULT_MAX_TERMS, term_limit
from .traces import Trace


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, help="path to the graph JSON document")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS,
                        help="cap on polynomial terms (default 10^6)")
    common.add_argument("--max-vertices", type=_positive, default=DEFAULT_MAX_VERTICES)

    parser = _Parser(prog="raaglie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lyndon", parents=[common], help="Lyndon elements and bracketings")
    p.add_argument("--max-len", type=_positive, required=True)

    p = sub.add_parser("lcs-basis", parents=[common], help="basis of gamma_K / gamma_K+1")
    p.add_argument("--degree", type=_positive, required=True)

    p = sub.add_parser("magnus", parents=[common], help="truncated Magnus expansion")
    p.add_argument("--truncate", type=_positive, required=True)
    p.add_argument("word")

    p = sub.add_parser("normal-form", parents=[common], help="normal form of a group word")
    p.add_argument("word")

    p = sub.add_parser("member", parents=[common], help="membership in gamma_K")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--truncate", type=_positive, default=None,
                   help="truncation degree (default degree + 1)")
    p.add_argument("word")

    p = sub.add_parser("coords", parents=[common], help="coordinates in gamma_K / gamma_K+1")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("word")

    p = sub.add_parser("structure", parents=[common], help="structure constants [a, b]")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("verify-series", parents=[common], help="Lyndon counts vs growth series")
    p.add_argument("--max-deg", type=_positive, required=True)
    return parser


def _load_graph(path: str, max_vertices: int):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read graph {path}: {exc.strerror}") from None
    return parse_graph(text, max_vertices=max_vertices)


def _lyndon_trace(g, text: str) -> Trace:
    t = Trace.parse(g, text)
    if not is_lyndon_element(t):
        raise NotLyndon(f"{t} is not a Lyndon element")
    return t


def _cmd_lyndon(g, args):
    groups = enumerate_lyndon(g, args.max_len)
    doc = {
        "max_len": args.max_len,
        "lengths": [
            {
                "length": n,
                "count": len(trees),
                "elements": [{"trace": t.trace.names, "bracketing": t.bracketing()} for t in trees],
            }
            for n, trees in groups.items()
        ],
    }
    lines = []
    for entry in doc["lengths"]:
        lines.append(f"length {entry['length']}: {entry['count']} elements")
        for el in entry["elements"]:
            lines.append(f"  {' '.join(el['trace'])}\t{el['bracketing']}")
    lines.append(f"total: {sum(e['count'] for e in doc['lengths'])}")
    return doc, lines


def _cmd_lcs_basis(g, args):
    basis = lyndon_basis(g, args.degree)
    doc = {
        "degree": args.degree,
        "rank": len(basis),
        "basis": [{"lyndon": t.trace.names, "bracketing": t.bracketing()} for t in basis],
    }
    lines = [f"gamma_{args.degree}/gamma_{args.degree + 1} is free abelian of rank {len(basis)}"]
    lines += [f"  {el['bracketing']}" for el in doc["basis"]]
    return doc, lines


def _cmd_magnus(g, args):
    w = parse_word(g, args.word)
    value = magnus(w, args.truncate).value
    doc = {"word": format_word(w), "expansion": value.to_json()}
    return doc, [str(value)]


def _cmd_normal_form(g, args):
    nf = normal_form(parse_word(g, args.word))
    text = format_word(nf)
    return {"normal_form": text, "syllables": len(nf)}, [text]


def _cmd_member(g, args):
    w = parse_word(g, args.word)
    k = args.degree
    n = args.truncate if args.truncate is not None else k + 1
    if n < k:
        raise UsageError(f"--truncate {n} is below --degree {k}")
    d = filtration_degree(w, n)
    if isinstance(d, AtLeast):
        member = d.bound >= k
        doc = {"degree": k, "truncation": n, "member": member,
               "filtration_degree": None, "at_least": d.bound}
        verdict = f"filtration degree >= {d.bound} (expansion is 1 up to degree {n})"
    else:
        member = d >= k
        doc = {"degree": k, "truncation": n, "member": member,
               "filtration_degree": d, "at_least": None}
        verdict = f"filtration degree {d} (in gamma_{d}, not in gamma_{d + 1})"
    head = "member" if member else "not a member"
    return doc, [f"{head} of gamma_{k}", verdict]


def _cmd_coords(g, args):
    w = parse_word(g, args.word)
    coords = lcs_coordinates(w, args.degree)
    lines = [f"{c}\t{lyndon_tree(m).bracketing()}" for m, c in coords.items()] or ["0"]
    return coords.to_json(), lines


def _cmd_structure(g, args):
    a, b = _lyndon_trace(g, args.a), _lyndon_trace(g, args.b)
    coords = structure_constants(a, b)
    doc = coords.to_json()
    doc["a"], doc["b"] = lyndon_tree(a).bracketing(), lyndon_tree(b).bracketing()
    lines = [f"[{doc['a']}, {doc['b']}] ="]
    lines += [f"  {c}\t{lyndon_tree(m).bracketing()}" for m, c in coords.items()] or ["  0"]
    return doc, lines


def _cmd_verify_series(g, args):
    report = witt_product_check(g, args.max_deg)
    doc = report.to_json()
    lines = [
        f"lyndon product: {' '.join(map(str, report.lhs))}",
        f"growth series:  {' '.join(map(str, report.rhs))}",
        "equal" if report.equal else "MISMATCH",
    ]
    return doc, lines


COMMANDS = {
    "lyndon": _cmd_lyndon,
    "lcs-basis": _cmd_lcs_basis,
    "magnus": _cmd_magnus,
    "normal-form": _cmd_normal_form,
    "member": _cmd_member,
    "coords": _cmd_coords,
    "structure": _cmd_structure,
    "verify-series": _cmd_verify_series,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        g = _load_graph(args.graph, args.max_vertices)
        with term_limit(args.max_terms):
            doc, lines = COMMANDS[args.command](g, args)
    except (UsageError, GraphError, WordSyntaxError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except RaagError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    if args.command == "verify-series" and not doc["equal"]:
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
