"""
Edge-colored simple graphs.

Vertices are the dense ids 0..n-1. Every edge is stored once as an increasing
pair and carries one nonnegative integer color.
"""

import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationInfo, field_validator

from rainbowtri.errors import InvalidArgumentError
from rainbowtri.models import ColorStats, TriangleSet, Triple

_logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class ColoredGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(0, ge=0)
    coloring: Dict[Edge, int] = Field(default_factory=dict)

    _adjacency: List[Dict[int, int]] = PrivateAttr(default_factory=list)
    _color_classes: Dict[int, List[Edge]] = PrivateAttr(default_factory=dict)

    @field_validator("coloring", mode="before")
    @classmethod
    def _normalize_pairs(cls, value: Any, info: ValidationInfo):
        if not isinstance(value, Mapping):
            raise ValueError("coloring must map vertex pairs to colors")
        # n is absent from info.data when it failed its own validation
        n = info.data.get("n")
        normalized: Dict[Edge, int] = {}
        for pair, color in value.items():
            try:
                u, v = (int(x) for x in pair)
                color = int(color)
            except (TypeError, ValueError):
                raise ValueError(f"malformed edge entry {pair!r}: {color!r}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edge = normalize_edge(u, v)
            if n is not None and (edge[0] < 0 or edge[1] >= n):
                raise ValueError(f"edge {edge} has an endpoint outside 0..{n - 1}")
            if edge in normalized:
                raise ValueError(f"duplicate edge {edge}")
            if color < 0:
                raise ValueError(f"edge {edge} has negative color {color}")
            normalized[edge] = color
        return normalized

    def model_post_init(self, __context: Any) -> None:
        adjacency: List[Dict[int, int]] = [{} for _ in range(self.n)]
        classes: Dict[int, List[Edge]] = {}
        for (u, v), color in sorted(self.coloring.items()):
            adjacency[u][v] = color
            adjacency[v][u] = color
            classes.setdefault(color, []).append((u, v))
        self._adjacency = adjacency
        self._color_classes = classes

    @classmethod
    def unchecked(cls, n: int, coloring: Dict[Edge, int]) -> "ColoredGraph":
        """Build without validation from increasing, in-range pairs.

        For generators whose output is valid by construction; model_construct
        still runs model_post_init.
        """
        return cls.model_construct(n=n, coloring=coloring)

    @classmethod
    def from_edges(cls, n: int, colored_edges: Iterable[Tuple[int, int, int]]) -> "ColoredGraph":
        """Build from (u, v, color) triples."""
        coloring: Dict[Edge, int] = {}
        for u, v, color in colored_edges:
            edge = normalize_edge(u, v)
            if edge in coloring:
                raise InvalidArgumentError(f"duplicate edge {edge}")
            coloring[edge] = color
        return cls(n=n, coloring=coloring)

    @property
    def edge_count(self) -> int:
        return len(self.coloring)

    def edges(self) -> List[Edge]:
        """Edges in lexicographic order."""
        return sorted(self.coloring)

    def colored_edges(self) -> List[Tuple[int, int, int]]:
        return [(u, v, self.coloring[(u, v)]) for u, v in self.edges()]

    def colors(self) -> List[int]:
        return sorted(self._color_classes)

    def color_class(self, color: int) -> List[Edge]:
        return list(self._color_classes.get(color, ()))

    def color(self, u: int, v: int) -> int:
        edge = normalize_edge(u, v)
        if edge not in self.coloring:
            raise InvalidArgumentError(f"{edge} is not an edge")
        return self.coloring[edge]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.coloring

    def neighbors(self, v: int) -> Dict[int, int]:
        """Neighbor id -> color of the joining edge."""
        _require_vertex(self, v)
        return dict(self._adjacency[v])

    def degree(self, v: int) -> int:
        _require_vertex(self, v)
        return len(self._adjacency[v])


def _require_vertex(G: ColoredGraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise InvalidArgumentError(f"vertex {v} out of range for n={G.n}")


def color_degree(G: ColoredGraph, v: int) -> int:
    """Number of distinct colors on the edges incident to v."""
    _require_vertex(G, v)
    return len(set(G._adjacency[v].values()))


def color_number(G: ColoredGraph) -> int:
    return len(G._color_classes)


def saturated_degree(G: ColoredGraph, v: int) -> int:
    """Number of colors all of whose edges are incident to v."""
    _require_vertex(G, v)
    count = 0
    for color in set(G._adjacency[v].values()):
        if all(v in edge for edge in G._color_classes[color]):
            count += 1
    return count


def enumerate_rainbow_triangles(G: ColoredGraph) -> TriangleSet:
    """Triples spanning a triangle whose three edge colors are pairwise distinct."""
    found = []
    adjacency = G._adjacency
    for u in range(G.n):
        higher = sorted(w for w in adjacency[u] if w > u)
        for i, v in enumerate(higher):
            c_uv = adjacency[u][v]
            for w in higher[i + 1:]:
                c_vw = adjacency[v].get(w)
                if c_vw is None:
                    continue
                c_uw = adjacency[u][w]
                if c_uv != c_vw and c_uv != c_uw and c_vw != c_uw:
                    found.append((u, v, w))
    return TriangleSet(triples=found)


def rainbow_triangle_witness(G: ColoredGraph) -> Optional[Triple]:
    return enumerate_rainbow_triangles(G).witness()


def stats(G: ColoredGraph) -> ColorStats:
    return ColorStats(
        color_number=color_number(G),
        color_degrees=tuple(color_degree(G, v) for v in range(G.n)),
        saturated_degrees=tuple(saturated_degree(G, v) for v in range(G.n)),
    )


def canonicalize(G: ColoredGraph) -> ColoredGraph:
    """Relabel colors 1, 2, ... by first appearance over the sorted edges."""
    relabel: Dict[int, int] = {}
    coloring: Dict[Edge, int] = {}
    for edge in G.edges():
        color = G.coloring[edge]
        if color not in relabel:
            relabel[color] = len(relabel) + 1
        coloring[edge] = relabel[color]
    return ColoredGraph.unchecked(G.n, coloring)


def delete_edge(G: ColoredGraph, u: int, v: int) -> ColoredGraph:
    edge = normalize_edge(u, v)
    if edge not in G.coloring:
        raise InvalidArgumentError(f"{edge} is not an edge")
    coloring = {e: c for e, c in G.coloring.items() if e != edge}
    return ColoredGraph(n=G.n, coloring=coloring)


def delete_vertex(G: ColoredGraph, v: int) -> ColoredGraph:
    """G - v on n-1 vertices; ids above v shift down by one."""
    _require_vertex(G, v)

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    coloring = {
        (shift(a), shift(b)): c
        for (a, b), c in G.coloring.items()
        if v not in (a, b)
    }
    return ColoredGraph(n=G.n - 1, coloring=coloring)


def underlying_graph(G: ColoredGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.coloring)
    return H

