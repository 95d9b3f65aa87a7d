"""
Bridges between oriented graphs and colored graphs.

- associated_colored_graph: D -> G(D), one fresh color per (tail, out-component).
- color_degree_preserving_reduction + orient: G -> G' -> D, the construction
  behind the color-degree conditions. Its two guarantees are checked by
  head_uniqueness_violations and color_degree_deficits.
"""

import logging
from collections import Counter
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from rainbowtri.colored_graph import (
    ColoredGraph,
    Edge,
    color_degree,
    enumerate_rainbow_triangles,
)
from rainbowtri.errors import PreconditionViolation
from rainbowtri.models import TriangleSet, Triple
from rainbowtri.oriented_graph import (
    Arc,
    OrientedGraph,
    enumerate_directed_triangles,
    out_component_number,
    out_components,
)

_logger = logging.getLogger(__name__)

TieBreak = Callable[[int, int], Arc]


def lower_to_higher(u: int, v: int) -> Arc:
    """Default tie break: orient from the smaller id to the larger."""
    return (min(u, v), max(u, v))


class AssociatedColoring(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: ColoredGraph
    # color -> (tail vertex, index of the head component in out_components order)
    color_origin: Dict[int, Tuple[int, int]]

    @model_validator(mode="after")
    def _origins_cover_colors(self):
        if set(self.color_origin) != set(self.graph.colors()):
            raise ValueError("every color needs exactly one origin")
        return self


class OrientationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    digraph: OrientedGraph
    source: ColoredGraph

    @model_validator(mode="after")
    def _same_underlying_graph(self):
        if self.digraph.n != self.source.n:
            raise ValueError("orientation and source differ in vertex count")
        if self.digraph.underlying_edges() != self.source.edges():
            raise ValueError("orientation does not cover exactly the source edges")
        return self


def associated_colored_graph(D: OrientedGraph) -> AssociatedColoring:
    """Color the underlying graph of D so that arcs from one tail into one
    weak component of D[N+(tail)] share a color and nothing else does.

    Colors are 1, 2, ... in order of (tail, component by smallest head).
    """
    coloring: Dict[Edge, int] = {}
    origin: Dict[int, Tuple[int, int]] = {}
    next_color = 1
    for tail in range(D.n):
        for index, component in enumerate(out_components(D, tail)):
            for head in component:
                coloring[(min(tail, head), max(tail, head))] = next_color
            origin[next_color] = (tail, index)
            next_color += 1
    graph = ColoredGraph.unchecked(D.n, coloring)
    return AssociatedColoring(graph=graph, color_origin=origin)


def triangle_correspondence(D: OrientedGraph) -> Tuple[TriangleSet, TriangleSet]:
    """(directed triangles of D, rainbow triangles of G(D)); the two are equal."""
    directed = enumerate_directed_triangles(D)
    rainbow = enumerate_rainbow_triangles(associated_colored_graph(D).graph)
    if directed != rainbow:
        _logger.error(f"triangle correspondence broken: {directed.sorted_triples()} vs {rainbow.sorted_triples()}")
    return directed, rainbow


def _color_recurs_at(adjacency: Dict[int, Dict[int, int]], x: int, other: int, color: int) -> bool:
    """True if some edge at x other than x-other has the given color."""
    return any(c == color for w, c in adjacency[x].items() if w != other)


def _adjacency_of(G: ColoredGraph) -> Dict[int, Dict[int, int]]:
    return {v: G.neighbors(v) for v in range(G.n)}


def color_degree_preserving_reduction(G: ColoredGraph) -> ColoredGraph:
    """Delete edges whose color recurs at both endpoints until none is left.

    Each deletion keeps every color degree. Edges are scanned once in
    lexicographic order. Counts only fall, so an edge kept earlier in the
    scan can never become removable later, and one pass matches a scan that
    restarts after every deletion.
    """
    # color -> number of incident edges, per vertex
    counts = [Counter(G.neighbors(v).values()) for v in range(G.n)]
    coloring = dict(G.coloring)
    deleted = 0
    for u, v in G.edges():
        color = coloring[(u, v)]
        if counts[u][color] > 1 and counts[v][color] > 1:
            del coloring[(u, v)]
            counts[u][color] -= 1
            counts[v][color] -= 1
            deleted += 1
    _logger.debug(f"reduction removed {deleted} of {G.edge_count} edges")
    return ColoredGraph.unchecked(G.n, coloring)


def orient(reduced: ColoredGraph, tie_break: Optional[TieBreak] = None) -> OrientationResult:
    """Orient every edge uv of a reduced graph toward the endpoint where its color is unique.

    Color unique at u only -> arc (v, u); unique at v only -> arc (u, v);
    unique at both -> tie_break(u, v). Raises PreconditionViolation if an edge's
    color recurs at both endpoints.
    """
    tie_break = tie_break or lower_to_higher
    adjacency = _adjacency_of(reduced)
    arcs: List[Arc] = []
    for u, v in reduced.edges():
        color = reduced.coloring[(u, v)]
        unique_at_u = not _color_recurs_at(adjacency, u, v, color)
        unique_at_v = not _color_recurs_at(adjacency, v, u, color)
        if unique_at_u and unique_at_v:
            arc = tie_break(u, v)
            if set(arc) != {u, v}:
                raise ValueError(f"tie break returned {arc} for edge {(u, v)}")
        elif unique_at_u:
            arc = (v, u)
        elif unique_at_v:
            arc = (u, v)
        else:
            raise PreconditionViolation(
                f"edge {(u, v)} has color {color} recurring at both endpoints; reduce the graph first",
                edge=(u, v),
            )
        arcs.append(arc)
    digraph = OrientedGraph.unchecked(reduced.n, frozenset(arcs))
    return OrientationResult(digraph=digraph, source=reduced)


def reduce_and_orient(G: ColoredGraph, tie_break: Optional[TieBreak] = None) -> OrientationResult:
    return orient(color_degree_preserving_reduction(G), tie_break)


def head_uniqueness_violations(result: OrientationResult) -> List[Arc]:
    """Arcs (u, v) whose color appears on another edge at the head v."""
    adjacency = _adjacency_of(result.source)
    return [
        (u, v)
        for u, v in result.digraph.sorted_arcs()
        if _color_recurs_at(adjacency, v, u, result.source.coloring[(min(u, v), max(u, v))])
    ]


def color_degree_deficits(result: OrientationResult) -> Dict[int, int]:
    """Vertices where d^c(v) in the source exceeds d-(v) + w+(v) in the orientation."""
    deficits = {}
    D = result.digraph
    for v in range(D.n):
        gap = color_degree(result.source, v) - (D.in_degree(v) + out_component_number(D, v))
        if gap > 0:
            deficits[v] = gap
    return deficits


def deficit_witness(result: OrientationResult, v: int) -> Optional[Triple]:
    """A triangle v, x, y with x -> y inside N+(v) and C(vx) != C(vy).

    Such a triangle is rainbow whenever head uniqueness holds, so a vertex
    with a color-degree deficit always has one.
    """
    D, G = result.digraph, result.source
    heads = D.out_neighbors(v)
    for x in sorted(heads):
        for y in sorted(D.out_neighbors(x) & heads):
            if G.color(v, x) != G.color(v, y):
                a, b, c = sorted((v, x, y))
                return (a, b, c)
    return None
