"""Command-line interface.

JSON results go to stdout, a one-line summary to stderr. Exit codes:
0 success, 1 usage or input error, 2 hypothesis violation, 3 counterexample.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from .constructions import (
    DivisibilityError,
    GenerationError,
    gen_dstar,
    gen_proper_coloring_complete,
    gen_random_colored,
    gen_random_oriented,
)
from .cycles import find_directed_c4, find_rainbow_c4_exhaustive
from .graphs import ColoredBipartiteGraph, OrientedBipartiteGraph
from .harness import BudgetExceededError, verify_thm9_exhaustive, verify_thm9_random, verify_thm10_random
from .recognize import HypothesisViolation, check_thm9_hypothesis, check_thm10_hypothesis
from .reduction import (
    Branch,
    EarlyRainbow,
    HypothesisTooWeakError,
    NoEdgeError,
    build_reduction,
    find_rainbow_c4_guided,
)
from .serialize import GraphFormatError, dumps, load

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_COUNTEREXAMPLE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj, summary: str) -> None:
    print(dumps(obj))
    print(summary, file=sys.stderr)


def _graph_file(path: str, kind: type):
    graph = load(path)
    if not isinstance(graph, kind):
        want = "oriented" if kind is OrientedBipartiteGraph else "colored"
        raise GraphFormatError(f"expected a {want} graph", f"{path}: $.kind")
    return graph


def cmd_gen(args) -> int:
    if args.what == "dstar":
        graph = gen_dstar(args.m, args.n)
    elif args.what == "k33-proper":
        graph = gen_proper_coloring_complete(args.n)
    elif args.what == "random-oriented":
        graph = gen_random_oriented(args.m, args.n, tuple(args.profile), args.seed, args.enforce)
    else:
        graph = gen_random_colored(args.m, args.n, args.edge_prob, args.palette, args.seed, args.enforce)
    size = len(graph.arcs) if isinstance(graph, OrientedBipartiteGraph) else len(graph.edges)
    _emit(graph, f"generated {args.what} on sides ({graph.m}, {graph.n}) with {size} arcs/edges")
    return EXIT_OK


def cmd_detect(args) -> int:
    if args.what == "directed-c4":
        cert = find_directed_c4(_graph_file(args.input, OrientedBipartiteGraph))
        _emit(cert.to_dict() if cert else None, "directed C4 found" if cert else "no directed C4")
        return EXIT_OK
    G = _graph_file(args.input, ColoredBipartiteGraph)
    if not args.guided:
        cert = find_rainbow_c4_exhaustive(G)
        _emit(cert.to_dict() if cert else None, "rainbow C4 found" if cert else "no rainbow C4")
        return EXIT_OK
    result = find_rainbow_c4_guided(G, strict=args.strict)
    if isinstance(result, HypothesisViolation):
        _emit({"hypothesis_violation": result.to_dict()}, f"hypothesis violated: {result}")
        return EXIT_HYPOTHESIS
    _emit(result.to_dict(), f"branch {result.branch.value}" + (f"; {result.diagnostic}" if result.diagnostic else ""))
    return EXIT_COUNTEREXAMPLE if result.branch is Branch.COUNTEREXAMPLE else EXIT_OK


def cmd_reduce(args) -> int:
    G = _graph_file(args.input, ColoredBipartiteGraph)
    try:
        built = build_reduction(G, args.x, args.y)
    except HypothesisTooWeakError as exc:
        _emit({"hypothesis_violation": {"vertex": list(exc.vertex), "have": exc.have, "need": exc.need}}, str(exc))
        return EXIT_HYPOTHESIS
    if isinstance(built, EarlyRainbow):
        _emit({"early_rainbow": built.certificate.to_dict()}, "rainbow C4 through the chosen edge")
        return EXIT_OK
    _emit({"context": built.to_dict()}, f"orientation with {len(built.D.arcs)} arcs on ({built.D.m}, {built.D.n})")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem == "thm9":
        if args.exhaustive:
            report = verify_thm9_exhaustive(args.m, args.n, jobs=args.jobs)
        else:
            report = verify_thm9_random(args.m, args.n, args.trials, args.seed, jobs=args.jobs)
    else:
        report = verify_thm10_random(
            args.m, args.n, args.trials, args.palette, args.edge_prob, args.seed, jobs=args.jobs
        )
    bad = len(report.counterexamples)
    _emit(
        report.to_dict(),
        f"{report.instances_examined} examined, {report.hypothesis_satisfied} meet the hypothesis, "
        f"{report.with_cycle} with cycle, {report.extremal} extremal, {bad} counterexamples "
        f"({report.elapsed:.2f}s)",
    )
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_check(args) -> int:
    graph = load(args.input)
    if isinstance(graph, OrientedBipartiteGraph):
        violation = check_thm9_hypothesis(graph)
    else:
        violation = check_thm10_hypothesis(graph, strict=args.strict)
    if violation is None:
        _emit({"hypothesis": "pass"}, "hypothesis holds")
        return EXIT_OK
    _emit({"hypothesis": "fail", "violation": violation.to_dict()}, f"hypothesis violated: {violation}")
    return EXIT_HYPOTHESIS


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowc4", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a graph")
    gsub = gen.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = gsub.add_parser("dstar")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = gsub.add_parser("k33-proper")
    p.add_argument("--n", type=int, default=3)
    p = gsub.add_parser("random-oriented")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", type=_fraction, nargs=3, default=[Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)],
                   metavar=("P_NONE", "P_ATOB", "P_BTOA"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--enforce", action="store_true", help="enforce the out-degree hypothesis")
    p = gsub.add_parser("random-colored")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edge-prob", type=_fraction, required=True)
    p.add_argument("--palette", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--enforce", action="store_true", help="enforce the color-degree hypothesis")
    gen.set_defaults(func=cmd_gen)

    detect = sub.add_parser("detect", help="search a graph file for a C4")
    dsub = detect.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = dsub.add_parser("directed-c4")
    p.add_argument("--in", dest="input", required=True)
    p = dsub.add_parser("rainbow-c4")
    p.add_argument("--in", dest="input", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--guided", action="store_true")
    mode.add_argument("--exhaustive", action="store_true")
    p.add_argument("--strict", action="store_true")
    detect.set_defaults(func=cmd_detect)

    p = sub.add_parser("reduce", help="build the orientation for edge x-y of a colored graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    verify = sub.add_parser("verify", help="run a verification harness")
    vsub = verify.add_subparsers(dest="theorem", required=True, parser_class=_Parser)
    p = vsub.add_parser("thm9")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p = vsub.add_parser("thm10")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--palette", type=int, required=True)
    p.add_argument("--edge-prob", type=_fraction, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    verify.set_defaults(func=cmd_verify)

    check = sub.add_parser("check", help="check the degree hypothesis of a graph file")
    csub = check.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = csub.add_parser("hypothesis")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--strict", action="store_true")
    check.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"rainbowc4: malformed graph file: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"rainbowc4: {exc}", file=sys.stderr)
    except (DivisibilityError, GenerationError, BudgetExceededError, NoEdgeError, ValueError) as exc:
        print(f"rainbowc4: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
