"""
Plain-text graph files.

    ecg <n> <m>          dig <n> <m>
    <u> <v> <color>      <u> <v>        (arc u -> v)

Vertices are 0-based. Blank lines and anything after '#' are ignored.
Colored edges are written with u < v; serialization sorts edges and arcs.
"""

import logging
import sys
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from pydantic import ValidationError

from rainbowtri.colored_graph import ColoredGraph
from rainbowtri.errors import GraphParseError
from rainbowtri.oriented_graph import OrientedGraph
from rainbowtri.protocol import STDIN_MARKER, GraphKind
from rainbowtri.settings import get_settings

_logger = logging.getLogger(__name__)

Graph = Union[ColoredGraph, OrientedGraph]


def _content_lines(text: str) -> Iterable[Tuple[int, List[str]]]:
    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield line_number, tokens


def _ints(tokens: List[str], line_number: int) -> List[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", line_number)
    if any(x < 0 for x in values):
        raise GraphParseError("negative values are not allowed", line_number)
    return values


def parse(text: str) -> Graph:
    """Parse a graph file into a ColoredGraph ('ecg') or an OrientedGraph ('dig')."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphParseError("empty graph file")

    header_line, header = lines[0]
    if len(header) != 3 or header[0] not in (GraphKind.COLORED.value, GraphKind.ORIENTED.value):
        raise GraphParseError("header must be 'ecg <n> <m>' or 'dig <n> <m>'", header_line)
    kind = GraphKind(header[0])
    n, m = _ints(header[1:], header_line)
    limit = get_settings().graph_files.max_vertices
    if n > limit:
        raise GraphParseError(f"n={n} exceeds the configured maximum of {limit} vertices", header_line)

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise GraphParseError(f"header announces {m} lines, found {len(body)}", last)

    if kind == GraphKind.COLORED:
        return _parse_colored(n, body)
    return _parse_oriented(n, body)


def _check_vertex(x: int, n: int, line_number: int) -> None:
    if x >= n:
        raise GraphParseError(f"vertex {x} out of range for n={n}", line_number)


def _parse_colored(n: int, body: List[Tuple[int, List[str]]]) -> ColoredGraph:
    coloring = {}
    for line_number, tokens in body:
        if len(tokens) != 3:
            raise GraphParseError("colored edge lines are '<u> <v> <color>'", line_number)
        u, v, color = _ints(tokens, line_number)
        _check_vertex(u, n, line_number)
        _check_vertex(v, n, line_number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line_number)
        if u > v:
            raise GraphParseError(f"edge endpoints must be written with u < v, got {u} {v}", line_number)
        if (u, v) in coloring:
            raise GraphParseError(f"duplicate edge {u} {v}", line_number)
        coloring[(u, v)] = color
    try:
        return ColoredGraph(n=n, coloring=coloring)
    except ValidationError as e:
        raise GraphParseError(str(e))


def _parse_oriented(n: int, body: List[Tuple[int, List[str]]]) -> OrientedGraph:
    arcs = set()
    for line_number, tokens in body:
        if len(tokens) != 2:
            raise GraphParseError("arc lines are '<u> <v>'", line_number)
        u, v = _ints(tokens, line_number)
        _check_vertex(u, n, line_number)
        _check_vertex(v, n, line_number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line_number)
        if (u, v) in arcs:
            raise GraphParseError(f"duplicate arc {u} {v}", line_number)
        if (v, u) in arcs:
            raise GraphParseError(f"arc {u} {v} reverses arc {v} {u} (digon)", line_number)
        arcs.add((u, v))
    try:
        return OrientedGraph(n=n, arcs=frozenset(arcs))
    except ValidationError as e:
        raise GraphParseError(str(e))


def serialize(graph: Graph) -> str:
    if isinstance(graph, ColoredGraph):
        lines = [f"{GraphKind.COLORED.value} {graph.n} {graph.edge_count}"]
        lines.extend(f"{u} {v} {c}" for u, v, c in graph.colored_edges())
    else:
        lines = [f"{GraphKind.ORIENTED.value} {graph.n} {graph.arc_count}"]
        lines.extend(f"{u} {v}" for u, v in graph.sorted_arcs())
    return "\n".join(lines) + "\n"


def read_graph(source: Union[str, Path]) -> Graph:
    """Read a graph from a path, or from standard input when source is '-'."""
    if str(source) == STDIN_MARKER:
        try:
            return parse(sys.stdin.read())
        except UnicodeDecodeError as e:
            raise GraphParseError(f"standard input is not valid UTF-8: {e}")
    try:
        with open(source, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise GraphParseError(f"{source} is not valid UTF-8: {e}")
    except OSError as e:
        raise GraphParseError(f"cannot read {source}: {e}")
    _logger.debug(f"Read {len(text)} bytes from {source}")
    return parse(text)
