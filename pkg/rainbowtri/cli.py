"""
Command-line front end.

    rainbowtri check <theorem> <file>
    rainbowtri find <file>
    rainbowtri reduce <file>
    rainbowtri orient <file> [--assume-reduced]
    rainbowtri assoc <file>
    rainbowtri generate <family> <n> [--seed S]
    rainbowtri verify <theorem> --n K [--exhaustive | --samples S --seed X]
    rainbowtri ch-search --n-max K

Results go to stdout, logs to stderr. Exit codes follow protocol.ExitCode.
"""

import argparse
import logging
import sys
from typing import Callable, List, Optional

from pydantic import ValidationError

from rainbowtri import colored_graph as cg
from rainbowtri import oriented_graph as og
from rainbowtri.colored_graph import ColoredGraph
from rainbowtri.errors import InvalidArgumentError, RainbowTriError
from rainbowtri.extremal import generate
from rainbowtri.graph_io import Graph, read_graph, serialize
from rainbowtri.harness import format_report, report_records, search_ch_counterexample, verify
from rainbowtri.models import EnumerationSpec, GeneratorSpec, TheoremVerdict
from rainbowtri.oriented_graph import OrientedGraph
from rainbowtri.protocol import (
    COLORED_THEOREMS,
    Conclusion,
    EnumerationKind,
    ExitCode,
    GeneratorFamily,
    TheoremId,
)
from rainbowtri.reductions import associated_colored_graph, color_degree_preserving_reduction, orient
from rainbowtri.settings import get_settings
from rainbowtri.theorems import evaluate

_logger = logging.getLogger(__name__)

CHECK_THEOREMS = [
    TheoremId.T1, TheoremId.T2, TheoremId.COR1, TheoremId.T3, TheoremId.T4,
    TheoremId.T5, TheoremId.T6, TheoremId.CH, TheoremId.CN,
]
VERIFY_THEOREMS = CHECK_THEOREMS + [TheoremId.PIPELINE, TheoremId.CORRESPONDENCE]


def _theorem_choice(allowed: List[TheoremId]) -> Callable[[str], TheoremId]:
    names = {t.value.lower(): t for t in allowed}

    def convert(text: str) -> TheoremId:
        try:
            return names[text.lower()]
        except KeyError:
            raise argparse.ArgumentTypeError(f"unknown theorem {text!r}; choose from {', '.join(names)}")

    return convert


def _output(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def format_verdict(verdict: TheoremVerdict) -> str:
    lines = [
        f"theorem: {verdict.theorem_id.value}",
        f"condition met: {'yes' if verdict.condition_met else 'no'}",
        f"conclusion: {verdict.conclusion.value}",
    ]
    witness = verdict.witness
    if witness is not None:
        if witness.triangle is not None:
            lines.append("triangle: " + " ".join(map(str, witness.triangle)))
        if witness.bipartition is not None:
            left, right = witness.bipartition
            lines.append(f"bipartition: {' '.join(map(str, left))} | {' '.join(map(str, right))}")
        if witness.detail:
            lines.append(f"detail: {witness.detail}")
        if witness.instance:
            lines.append("instance:")
            lines.extend(f"  {line}" for line in witness.instance.splitlines())
    return "\n".join(lines) + "\n"


def _require_colored(graph: Graph, command: str) -> ColoredGraph:
    if not isinstance(graph, ColoredGraph):
        raise InvalidArgumentError(f"{command} needs a colored ('ecg') graph")
    return graph


def _require_oriented(graph: Graph, command: str) -> OrientedGraph:
    if not isinstance(graph, OrientedGraph):
        raise InvalidArgumentError(f"{command} needs an oriented ('dig') graph")
    return graph


def cmd_check(args: argparse.Namespace) -> int:
    verdict = evaluate(args.theorem, read_graph(args.file))
    _output(format_verdict(verdict))
    if verdict.conclusion == Conclusion.VIOLATION:
        return ExitCode.VIOLATION
    if not verdict.condition_met:
        return ExitCode.NOT_MET
    return ExitCode.SUCCESS


def cmd_find(args: argparse.Namespace) -> int:
    graph = read_graph(args.file)
    if isinstance(graph, ColoredGraph):
        triangles = cg.enumerate_rainbow_triangles(graph)
    else:
        triangles = og.enumerate_directed_triangles(graph)
    for triple in triangles.sorted_triples():
        _output(" ".join(map(str, triple)))
    _logger.info(f"Found {len(triangles)} triangles")
    return ExitCode.SUCCESS if len(triangles) else ExitCode.NOT_MET


def cmd_reduce(args: argparse.Namespace) -> int:
    G = _require_colored(read_graph(args.file), "reduce")
    reduced = color_degree_preserving_reduction(G)
    _logger.info(f"Reduced {G.edge_count} edges to {reduced.edge_count}")
    _output(serialize(reduced))
    return ExitCode.SUCCESS


def cmd_orient(args: argparse.Namespace) -> int:
    G = _require_colored(read_graph(args.file), "orient")
    if not args.assume_reduced:
        G = color_degree_preserving_reduction(G)
    _output(serialize(orient(G).digraph))
    return ExitCode.SUCCESS


def cmd_assoc(args: argparse.Namespace) -> int:
    D = _require_oriented(read_graph(args.file), "assoc")
    _output(serialize(associated_colored_graph(D).graph))
    return ExitCode.SUCCESS


def cmd_generate(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(family=args.family, n=args.n, orientation_seed=args.seed)
    _output(serialize(generate(spec)))
    return ExitCode.SUCCESS


def _enumeration_spec(args: argparse.Namespace) -> EnumerationSpec:
    colored = args.theorem in COLORED_THEOREMS
    if args.samples is None:
        kind = EnumerationKind.ALL_COLORED_GRAPHS if colored else EnumerationKind.ALL_ORIENTED_GRAPHS
        return EnumerationSpec(kind=kind, n=args.n, allow_large=args.allow_large)
    defaults = get_settings().random
    kind = EnumerationKind.RANDOM_COLORED if colored else EnumerationKind.RANDOM_ORIENTED
    seed = defaults.seed if args.seed is None else args.seed
    return EnumerationSpec(kind=kind, n=args.n, sample_count=args.samples, seed=seed)


def _emit_report(report, fmt: str) -> None:
    if fmt == "jsonl":
        for record in report_records(report):
            _output(record)
    else:
        _output(format_report(report))


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify(_enumeration_spec(args), args.theorem, workers=args.workers)
    _emit_report(report, args.format)
    return ExitCode.VIOLATION if report.violations else ExitCode.SUCCESS


def cmd_ch_search(args: argparse.Namespace) -> int:
    report = search_ch_counterexample(args.n_max, allow_large=args.allow_large, workers=args.workers)
    _emit_report(report, args.format)
    return ExitCode.VIOLATION if report.violations else ExitCode.SUCCESS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowtri",
        description="Rainbow triangles in edge-colored graphs and directed triangles in oriented graphs",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate one theorem's condition and conclusion")
    p.add_argument("theorem", type=_theorem_choice(CHECK_THEOREMS), help="t1 t2 cor1 t3 t4 t5 t6 ch cn")
    p.add_argument("file", help="graph file, '-' for stdin")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("find", help="list rainbow (ecg) or directed (dig) triangles")
    p.add_argument("file")
    p.set_defaults(handler=cmd_find)

    p = sub.add_parser("reduce", help="color-degree preserving reduction")
    p.add_argument("file")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("orient", help="orient a colored graph toward unique colors")
    p.add_argument("file")
    p.add_argument("--assume-reduced", action="store_true", help="skip the reduction step")
    p.set_defaults(handler=cmd_orient)

    p = sub.add_parser("assoc", help="associated colored graph of an oriented graph")
    p.add_argument("file")
    p.set_defaults(handler=cmd_assoc)

    p = sub.add_parser("generate", help="write an extremal construction")
    p.add_argument("family", choices=[f.value for f in GeneratorFamily])
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=None, help="orientation seed (oriented-bipartite only)")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("verify", help="run a checker over an instance stream")
    p.add_argument("theorem", type=_theorem_choice(VERIFY_THEOREMS))
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="all labeled instances (default)")
    mode.add_argument("--samples", type=int, default=None, help="random instances")
    p.add_argument("--seed", type=int, default=None)
    _add_run_options(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("ch-search", help="exhaustive search for min in-degree >= n/3 without a directed triangle")
    p.add_argument("--n-max", type=int, required=True)
    _add_run_options(p)
    p.set_defaults(handler=cmd_ch_search)

    return parser


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--allow-large", action="store_true", help="use the opt-in oriented cap")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=["text", "jsonl"], default="text")


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level, logging.INFO)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(level)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args.verbose)

    try:
        return int(args.handler(args))
    except (RainbowTriError, ValidationError) as e:
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.USAGE_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
