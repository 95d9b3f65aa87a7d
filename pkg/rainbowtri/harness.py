"""
Verification Harness
Exhaustive and randomized instance streams plus batch evaluation of the
checkers in theorems.py.

Every stream is split into numbered units so a chunk [start, stop) can be
evaluated on its own:

- AllColoredGraphs: unit = edge mask; yields every canonical coloring of it
- ColoringsOfFixedGraph: a single unit
- AllOrientedGraphs: unit = base-3 index (0 absent, 1 u->v, 2 v->u per pair)
- Random*: unit = sample index, drawn from random.Random(f"{seed}:{i}")

Chunks are merged in index order, so a parallel run reports exactly what a
sequential run reports.
"""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from rainbowtri.colored_graph import ColoredGraph, Edge, canonicalize
from rainbowtri.errors import InvalidArgumentError, LimitExceededError
from rainbowtri.models import EnumerationSpec, VerificationReport
from rainbowtri.oriented_graph import OrientedGraph
from rainbowtri.protocol import (
    COLORED_KINDS,
    COLORED_THEOREMS,
    PARALLEL_MIN_UNITS,
    REPORTABLE_CONCLUSIONS,
    Conclusion,
    EnumerationKind,
    TheoremId,
)
from rainbowtri.settings import get_settings
from rainbowtri.theorems import CHECKERS

_logger = logging.getLogger(__name__)

Graph = Union[ColoredGraph, OrientedGraph]


def _pairs(n: int) -> List[Edge]:
    return list(combinations(range(n), 2))


def restricted_growth_strings(m: int) -> Iterator[Tuple[int, ...]]:
    """1-based restricted growth strings of length m, in lexicographic order.

    Each entry is at most one more than the largest entry before it, so every
    partition of m positions appears exactly once (Bell(m) strings).
    """
    if m < 0:
        raise InvalidArgumentError(f"length must be nonnegative, got {m}")
    if m == 0:
        yield ()
        return

    prefix = [1]

    def extend(top: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for color in range(1, top + 2):
            prefix.append(color)
            yield from extend(max(top, color))
            prefix.pop()

    yield from extend(1)


def enumerate_colorings(n: int, edges: Sequence[Edge]) -> Iterator[ColoredGraph]:
    """Every canonical coloring of the graph on n vertices with the given edges."""
    ordered = sorted((min(u, v), max(u, v)) for u, v in edges)
    if len(set(ordered)) != len(ordered):
        raise InvalidArgumentError("base graph lists an edge twice")
    # one validated build rejects loops and out-of-range ids for the whole stream
    ColoredGraph(n=n, coloring=dict.fromkeys(ordered, 1))
    for rgs in restricted_growth_strings(len(ordered)):
        yield ColoredGraph.unchecked(n, dict(zip(ordered, rgs)))


def _colored_cap() -> int:
    return get_settings().exhaustive.colored_cap


def _require_within(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise LimitExceededError(n, cap, what)


def _edges_of_mask(pairs: List[Edge], mask: int) -> List[Edge]:
    return [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]


def enumerate_colored_graphs(n: int) -> Iterator[ColoredGraph]:
    """Every labeled graph on n vertices with each of its canonical colorings."""
    _require_within(n, _colored_cap(), "exhaustive colored enumeration")
    pairs = _pairs(n)
    for mask in range(2 ** len(pairs)):
        yield from enumerate_colorings(n, _edges_of_mask(pairs, mask))


def _oriented_from_index(n: int, pairs: List[Edge], index: int) -> OrientedGraph:
    arcs = []
    for u, v in pairs:
        index, digit = divmod(index, 3)
        if digit == 1:
            arcs.append((u, v))
        elif digit == 2:
            arcs.append((v, u))
    return OrientedGraph.unchecked(n, frozenset(arcs))


def enumerate_oriented_graphs(n: int, allow_large: bool = False) -> Iterator[OrientedGraph]:
    """All 3^C(n,2) labeled oriented graphs on n vertices."""
    _require_within(n, get_settings().oriented_cap(allow_large), "exhaustive oriented enumeration")
    pairs = _pairs(n)
    for index in range(3 ** len(pairs)):
        yield _oriented_from_index(n, pairs, index)


def _sample_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def _random_colored(n: int, seed: int, index: int, canonical: bool) -> ColoredGraph:
    rng = _sample_rng(seed, index)
    density = rng.random()
    edges = [pair for pair in _pairs(n) if rng.random() < density]
    palette = rng.randint(1, max(1, len(edges)))
    G = ColoredGraph.unchecked(n, {edge: rng.randint(1, palette) for edge in edges})
    return canonicalize(G) if canonical else G


def _random_oriented(n: int, seed: int, index: int) -> OrientedGraph:
    rng = _sample_rng(seed, index)
    density = rng.random()
    arcs = []
    for u, v in _pairs(n):
        if rng.random() < density:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph.unchecked(n, frozenset(arcs))


def random_colored_graphs(n: int, count: int, seed: int, canonical: bool = True) -> Iterator[ColoredGraph]:
    for index in range(count):
        yield _random_colored(n, seed, index, canonical)


def random_oriented_graphs(n: int, count: int, seed: int) -> Iterator[OrientedGraph]:
    for index in range(count):
        yield _random_oriented(n, seed, index)


def _check_limits(spec: EnumerationSpec) -> None:
    settings = get_settings()
    if spec.kind == EnumerationKind.ALL_COLORED_GRAPHS:
        _require_within(spec.n, settings.exhaustive.colored_cap, "exhaustive colored enumeration")
    elif spec.kind == EnumerationKind.ALL_ORIENTED_GRAPHS:
        _require_within(spec.n, settings.oriented_cap(spec.allow_large), "exhaustive oriented enumeration")
    elif spec.kind == EnumerationKind.COLORINGS_OF_FIXED_GRAPH:
        # same edge budget as a complete graph at the colored cap
        max_edges = comb(settings.exhaustive.colored_cap, 2)
        if len(spec.base_edges or ()) > max_edges:
            raise LimitExceededError(len(spec.base_edges), max_edges, "coloring enumeration (edge count)")


def unit_count(spec: EnumerationSpec) -> int:
    if spec.kind == EnumerationKind.ALL_COLORED_GRAPHS:
        return 2 ** comb(spec.n, 2)
    if spec.kind == EnumerationKind.COLORINGS_OF_FIXED_GRAPH:
        return 1
    if spec.kind == EnumerationKind.ALL_ORIENTED_GRAPHS:
        return 3 ** comb(spec.n, 2)
    return spec.sample_count or 0


def instances(spec: EnumerationSpec, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """Instances of units start..stop-1 of the stream described by spec."""
    stop = unit_count(spec) if stop is None else stop
    pairs = _pairs(spec.n)
    for index in range(start, stop):
        if spec.kind == EnumerationKind.ALL_COLORED_GRAPHS:
            yield from enumerate_colorings(spec.n, _edges_of_mask(pairs, index))
        elif spec.kind == EnumerationKind.COLORINGS_OF_FIXED_GRAPH:
            yield from enumerate_colorings(spec.n, spec.base_edges)
        elif spec.kind == EnumerationKind.ALL_ORIENTED_GRAPHS:
            yield _oriented_from_index(spec.n, pairs, index)
        elif spec.kind == EnumerationKind.RANDOM_COLORED:
            yield _random_colored(spec.n, spec.seed, index, spec.canonical_colors)
        else:
            yield _random_oriented(spec.n, spec.seed, index)


def _require_compatible(spec: EnumerationSpec, theorem_id: TheoremId) -> None:
    colored_stream = spec.kind in COLORED_KINDS
    if colored_stream != (theorem_id in COLORED_THEOREMS):
        stream = "colored" if colored_stream else "oriented"
        raise InvalidArgumentError(f"{theorem_id.value} cannot run on a {stream} instance stream")


class _Tally:
    """Running counts for one checker within one chunk."""

    def __init__(self, theorem_id: TheoremId, max_counterexamples: int):
        self.theorem_id = theorem_id
        self.max_counterexamples = max_counterexamples
        self.checked = 0
        self.met = 0
        self.verdicts: Dict[Conclusion, int] = {}
        self.counterexamples: List[str] = []

    def add(self, graph: Graph) -> None:
        verdict = CHECKERS[self.theorem_id](graph)
        self.checked += 1
        self.met += verdict.condition_met
        self.verdicts[verdict.conclusion] = self.verdicts.get(verdict.conclusion, 0) + 1
        if verdict.conclusion in REPORTABLE_CONCLUSIONS:
            _logger.warning(f"{self.theorem_id.value}: {verdict.conclusion.value} on\n{verdict.witness.instance}")
            self.counterexamples.append(verdict.witness.instance)
            if len(self.counterexamples) > 2 * self.max_counterexamples:
                self.counterexamples = sorted(self.counterexamples)[:self.max_counterexamples]

    def report(self, instance_class: str, wall_time: float) -> VerificationReport:
        return VerificationReport(
            theorem_id=self.theorem_id,
            instance_class=instance_class,
            instances_checked=self.checked,
            condition_met_count=self.met,
            verdict_tally=dict(self.verdicts),
            counterexamples=sorted(self.counterexamples)[:self.max_counterexamples],
            wall_time=wall_time,
        )


def verify_chunk(
    spec: EnumerationSpec,
    theorem_ids: Sequence[TheoremId],
    start: int,
    stop: int,
    max_counterexamples: int,
) -> List[VerificationReport]:
    """Evaluate every checker on units start..stop-1; one report per checker."""
    began = time.perf_counter()
    tallies = [_Tally(theorem_id, max_counterexamples) for theorem_id in theorem_ids]
    for graph in instances(spec, start, stop):
        for tally in tallies:
            tally.add(graph)
    elapsed = time.perf_counter() - began
    return [tally.report(spec.describe(), elapsed) for tally in tallies]


def _chunks(total: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    bounds, start = [], 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def verify_batch(
    spec: EnumerationSpec,
    theorem_ids: Sequence[TheoremId],
    workers: Optional[int] = None,
    max_counterexamples: Optional[int] = None,
) -> List[VerificationReport]:
    """
    Run several checkers over one pass of the instance stream.

    Args:
        spec: Instance stream
        theorem_ids: Checkers to evaluate; each must match the stream's graph type
        workers: Process count; by default the configured harness.workers for
            streams of at least PARALLEL_MIN_UNITS units, otherwise 1
        max_counterexamples: Cap on stored counterexamples per checker

    Returns:
        One VerificationReport per checker, in the order given
    """
    if not theorem_ids:
        raise InvalidArgumentError("at least one checker is required")
    for theorem_id in theorem_ids:
        _require_compatible(spec, theorem_id)
    _check_limits(spec)

    settings = get_settings()
    total = unit_count(spec)
    if workers is None:
        workers = settings.harness.worker_count() if total >= PARALLEL_MIN_UNITS else 1
    max_counterexamples = max_counterexamples or settings.harness.max_counterexamples
    ids = list(theorem_ids)
    _logger.info(f"Verifying {[t.value for t in ids]} on {spec.describe()} ({total} units, {workers} workers)")

    began = time.perf_counter()
    if workers > 1 and total > 1:
        bounds = _chunks(total, workers * 4)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(verify_chunk, spec, ids, start, stop, max_counterexamples) for start, stop in bounds]
            partials = [future.result() for future in futures]
    else:
        partials = [verify_chunk(spec, ids, 0, total, max_counterexamples)]

    reports = partials[0]
    for chunk in partials[1:]:
        reports = [a.merge(b, max_counterexamples) for a, b in zip(reports, chunk)]
    elapsed = time.perf_counter() - began
    reports = [r.model_copy(update={"wall_time": elapsed}) for r in reports]

    for report in reports:
        _logger.info(
            f"{report.theorem_id.value}: {report.instances_checked} instances, "
            f"{report.condition_met_count} met, {report.violations} violations"
        )
    return reports


def verify(spec: EnumerationSpec, theorem_id: TheoremId, workers: Optional[int] = None) -> VerificationReport:
    return verify_batch(spec, [theorem_id], workers=workers)[0]


def search_ch_counterexample(n_max: int, allow_large: bool = False, workers: Optional[int] = None) -> VerificationReport:
    """Check min in-degree >= n/3 on every oriented graph with 1..n_max vertices."""
    if n_max < 1:
        raise InvalidArgumentError(f"n_max must be at least 1, got {n_max}")
    _require_within(n_max, get_settings().oriented_cap(allow_large), "counterexample search")
    max_counterexamples = get_settings().harness.max_counterexamples
    merged: Optional[VerificationReport] = None
    for n in range(1, n_max + 1):
        spec = EnumerationSpec(kind=EnumerationKind.ALL_ORIENTED_GRAPHS, n=n, allow_large=allow_large)
        report = verify(spec, TheoremId.CH, workers=workers)
        merged = report if merged is None else merged.merge(report, max_counterexamples)
    merged = merged.model_copy(update={"instance_class": f"all labeled oriented graphs, n=1..{n_max}"})
    if merged.conjecture_counterexamples:
        _logger.warning(f"Found {merged.conjecture_counterexamples} conjecture counterexamples")
    return merged


class VerdictRecord(BaseModel):
    """One machine-readable line of a report: a single verdict class."""
    model_config = ConfigDict(frozen=True)

    theorem_id: TheoremId
    instance_class: str
    instances_checked: int
    condition_met_count: int
    conclusion: Conclusion
    count: int
    counterexamples: List[str] = []
    wall_time: float


def report_records(report: VerificationReport) -> List[str]:
    records = []
    for conclusion in sorted(report.verdict_tally, key=lambda c: c.value):
        record = VerdictRecord(
            theorem_id=report.theorem_id,
            instance_class=report.instance_class,
            instances_checked=report.instances_checked,
            condition_met_count=report.condition_met_count,
            conclusion=conclusion,
            count=report.verdict_tally[conclusion],
            counterexamples=report.counterexamples if conclusion in REPORTABLE_CONCLUSIONS else [],
            wall_time=round(report.wall_time, 3),
        )
        records.append(record.model_dump_json())
    return records


def format_report(report: VerificationReport) -> str:
    lines = [
        f"theorem: {report.theorem_id.value}",
        f"instances: {report.instance_class}",
        f"checked: {report.instances_checked}",
        f"condition met: {report.condition_met_count}",
    ]
    for conclusion in sorted(report.verdict_tally, key=lambda c: c.value):
        lines.append(f"  {conclusion.value}: {report.verdict_tally[conclusion]}")
    lines.append(f"wall time: {report.wall_time:.3f}s")
    for i, instance in enumerate(report.counterexamples, start=1):
        lines.append(f"counterexample {i}:")
        lines.extend(f"  {line}" for line in instance.splitlines())
    return "\n".join(lines) + "\n"
