"""Command-line surface: enumeration dumps, tree/path mapping, weight sums,
identity verification, tables and sequences as CSV, and renderings.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Machine output is JSON lines or CSV; everything is byte-deterministic for
fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import render
from .bijection import category_census, path_to_tree, tree_to_path
from .enumeration import FAMILIES, objects
from .identities import (DEFAULT_ORACLE_MAX, VERIFIERS,
                         first_coefficient_difference, multiple_dyck_count,
                         run_count_table)
from .poly import PolyParseError
from .structures import EmptyTree, ParseError, parse_path, parse_tree
from .weights import (edge_weighting_from_json, merge_levels,
                      motzkin_weighting_from_json, step_weighting_from_json,
                      theorem1_edge_weights, theorem1_step_weights,
                      theorem2_edge_weights, theorem2_step_weights,
                      total_motzkin_weight, total_path_weight,
                      total_tree_weight)


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(sum(1 for _ in objects(args.family, args.size)))
        return 0
    for index, obj in enumerate(objects(args.family, args.size)):
        if args.as_json:
            print(json.dumps({"index": index, "encoding": obj.encode()}))
        else:
            print(obj.encode())
    return 0


def cmd_map(args) -> int:
    if args.tree is not None:
        if args.inverse:
            print("error: --inverse applies to --path, not --tree",
                  file=sys.stderr)
            return 2
        tree = parse_tree(args.tree)
        print(tree_to_path(tree).encode())
    else:
        if not args.inverse:
            print("error: --path requires --inverse (paths map back to trees)",
                  file=sys.stderr)
            return 2
        tree = path_to_tree(parse_path(args.path, "2motzkin"))
        print(tree.encode())
    if args.census:
        census = category_census(tree)
        print(json.dumps({category.value: census[category]
                          for category in census}))
    return 0


def _load_weighting(spec: str, family: str):
    if spec in ("theorem1", "theorem2"):
        if family == "trees":
            return (theorem1_edge_weights() if spec == "theorem1"
                    else theorem2_edge_weights())
        steps = (theorem1_step_weights() if spec == "theorem1"
                 else theorem2_step_weights())
        return merge_levels(steps) if family == "motzkin" else steps
    with open(spec, encoding="utf-8") as handle:
        mapping = json.load(handle)
    if family == "trees":
        return edge_weighting_from_json(mapping)
    if family == "motzkin":
        return motzkin_weighting_from_json(mapping)
    return step_weighting_from_json(mapping)


def cmd_weightsum(args) -> int:
    weighting = _load_weighting(args.weighting, args.family)
    if args.family == "trees":
        total = total_tree_weight(args.size, weighting)
    elif args.family == "motzkin":
        total = total_motzkin_weight(args.size, weighting)
    else:
        total = total_path_weight(args.size, weighting)
    print(total.to_text())
    return 0


def cmd_verify(args) -> int:
    verifier = VERIFIERS[args.identity]
    if args.oracle_max is not None:
        oracle_cap = args.oracle_max
    else:
        oracle_cap = min(DEFAULT_ORACLE_MAX[args.identity], args.n_max)
    first_failure = None
    for n in range(1, args.n_max + 1):
        report = verifier(n, with_oracle=n <= oracle_cap)
        print(json.dumps(report.to_json_dict()))
        failed = not report.equal or report.oracle_equal is False
        if failed and first_failure is None:
            first_failure = report
    if first_failure is None:
        return 0
    against = (first_failure.rhs if not first_failure.equal
               else first_failure.oracle)
    where = first_coefficient_difference(first_failure.lhs, against)
    if where is not None:
        exponent, a, b = where
        print(f"error: {first_failure.identity} fails at n={first_failure.n}: "
              f"coefficient of {first_failure.var}^{exponent} is {a} on the "
              f"left but {b} on the other side", file=sys.stderr)
    return 1


def cmd_table(args) -> int:
    table = run_count_table(args.lambda_n)
    print("j,count")
    for j in sorted(table):
        print(f"{j},{table[j]}")
    if args.figure:
        render.save_bar_figure(
            table, args.figure, xlabel="runs",
            title=f"multiple Dyck paths of semilength {args.lambda_n} by runs")
    return 0


def cmd_sequence(args) -> int:
    pairs = [(n, multiple_dyck_count(n)) for n in range(args.n_max + 1)]
    print("n,count")
    for n, value in pairs:
        print(f"{n},{value}")
    if args.figure:
        render.save_sequence_figure(pairs, args.figure,
                                    title="multiple Dyck path counts")
    return 0


def _detect_path(text: str):
    if any(ch.isdigit() or ch.isspace() for ch in text):
        return parse_path(text, "mdyck")
    if "L" in text:
        return parse_path(text, "motzkin")
    return parse_path(text, "2motzkin")


def cmd_render(args) -> int:
    if args.tree is not None:
        tree = parse_tree(args.tree)
        print(render.tree_ascii(tree))
        if args.svg:
            render.save_tree_figure(tree, args.svg)
        return 0
    path = _detect_path(args.path)
    if hasattr(path, "runs"):
        # Flatten a multiple Dyck path's runs to its underlying Dyck word.
        letters = "".join(d * m for d, m in path.runs)
        path = parse_path(letters, "dyck")
    print(render.path_ascii(path))
    if args.svg:
        render.save_path_figure(path, args.svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twomotzkin",
        description="Plane trees, 2-Motzkin paths, the weight-preserving "
                    "correspondence between them, and exact identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate",
                       help="list every object of a family at one size")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", dest="as_json", action="store_true",
                   help="emit JSON lines instead of bare encodings")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="map a tree to its path, or back")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tree", help="balanced-parentheses encoding")
    group.add_argument("--path", help="2-Motzkin letters U/D/S/W")
    p.add_argument("--inverse", action="store_true",
                   help="map a path back to its tree")
    p.add_argument("--census", action="store_true",
                   help="also print the five-way edge category counts")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("weightsum",
                       help="total weight of a family at one size")
    p.add_argument("--family", required=True,
                   choices=["trees", "2motzkin", "motzkin"])
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--weighting", required=True,
                   help="theorem1, theorem2, or a JSON file of weights")
    p.set_defaults(func=cmd_weightsum)

    p = sub.add_parser("verify",
                       help="check one identity over a range of n")
    p.add_argument("--identity", required=True, choices=sorted(VERIFIERS))
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--oracle-max", type=int, default=None,
                   help="run the enumeration oracle for n up to this "
                        "(default: a per-identity cap; 0 disables)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table",
                       help="multiple Dyck paths by number of runs, as CSV")
    p.add_argument("--lambda", dest="lambda_n", required=True, type=int,
                   metavar="N", help="semilength")
    p.add_argument("--figure", help="also write a bar chart to this file")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sequence", help="emit a counting sequence as CSV")
    p.add_argument("--dn", action="store_true", required=True,
                   help="multiple Dyck path counts")
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--figure", help="also write a plot to this file")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("render", help="draw a tree or path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tree")
    group.add_argument("--path")
    p.add_argument("--svg", metavar="FILE",
                   help="also save a figure (format from the extension)")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PolyParseError, EmptyTree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
