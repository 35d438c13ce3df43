"""Command line front end.

    lambdatree classify-params --a 1 --b 2 --c 3
    lambdatree analyze-spec --spec wp:1122
    lambdatree enumerate --format csv
    lambdatree verify all --depth 6 --out report.json

Exit codes: 0 success, 1 usage error, 2 symbolic/oracle mismatch, 3 capacity.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, report
from .configurations import PeriodicSpec, RootConvention, parse_spec
from .errors import CapacityError, LambdaTreeError, ParseError
from .group_words import SubgroupDescriptor
from .model import LambdaParams
from .tree import _check_depth

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=report.FORMATS, default="markdown")
    common.add_argument("--out", type=Path, help="write to this file instead of stdout")
    common.add_argument("--subgroup", type=int, default=1, help="generator index j, A = {j}")
    common.add_argument("--depth", type=int, default=analysis.ORACLE_DEPTH)
    common.add_argument("--root-rule", choices=[r.value for r in RootConvention],
                        default=RootConvention.PARENT_IN_H0.value)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="lambdatree", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify-params", parents=[common], help="U_1..U_10 and regions A_m at a point")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)

    p = sub.add_parser("analyze-spec", parents=[common], help="class set and region of one spec")
    p.add_argument("--spec", required=True, help="'wp:1122' or 'p:12'")

    sub.add_parser("enumerate", parents=[common], help="table of all 81 weakly periodic specs")

    p = sub.add_parser("verify", parents=[common], help="check the ground-state theorems")
    p.add_argument("which", choices=("periodic", "weakly-periodic", "all"))
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"lambdatree: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        A = SubgroupDescriptor({args.subgroup}, k=2)
        _check_depth(args.depth)
        if args.depth < 4:
            raise ParseError("--depth must be at least 4")
        return _dispatch(args, A)
    except CapacityError as exc:
        print(f"lambdatree: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (LambdaTreeError, ValueError) as exc:
        print(f"lambdatree: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace, A: SubgroupDescriptor) -> int:
    if args.command == "classify-params":
        p = LambdaParams(args.a, args.b, args.c)
        _emit(report.render_params(report.classify_params_table(p), args.format), args.out)
        return EXIT_OK

    if args.command == "analyze-spec":
        spec = parse_spec(args.spec)
        if isinstance(spec, PeriodicSpec):
            res = analysis.periodic_class_set(spec, A)
        else:
            res = analysis.class_set(spec, A)
        _emit(report.render_analysis(report.analysis_dict(res), args.format), args.out)
        return EXIT_OK

    rule = RootConvention(args.root_rule)
    if args.command == "enumerate":
        rep = analysis.enumerate_all(A)
    elif args.which == "periodic":
        rep = analysis.verify_theorem_periodic(A, args.depth)
    elif args.which == "weakly-periodic":
        rep = analysis.verify_theorem_weakly_periodic(A, args.depth, args.seed, root_rule=rule)
    else:
        rep = analysis.verify_all(A, args.depth, args.seed, root_rule=rule)
    _emit(report.render_report(rep, args.format), args.out)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
