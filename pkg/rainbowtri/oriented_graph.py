"""
Oriented graphs: loop-free digraphs with at most one arc per vertex pair.

Out-component numbers count the weak components of the subdigraph induced
by a vertex's out-neighborhood.
"""

import logging
from typing import Any, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationInfo, field_validator, model_validator

from rainbowtri.errors import InvalidArgumentError
from rainbowtri.models import DegreeProfile, TriangleSet, Triple

_logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


def _weak_components(heads: Set[int], out_sets: List[Set[int]], in_sets: List[Set[int]]) -> List[FrozenSet[int]]:
    """Weak components of the subdigraph induced by heads, by smallest vertex."""
    remaining = set(heads)
    components = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        component, frontier = {start}, [start]
        while frontier:
            a = frontier.pop()
            for b in (out_sets[a] | in_sets[a]) & remaining:
                remaining.discard(b)
                component.add(b)
                frontier.append(b)
        components.append(frozenset(component))
    return components


class OrientedGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(0, ge=0)
    arcs: FrozenSet[Arc] = frozenset()
    # original vertex ids when this digraph was cut out of a larger one
    labels: Optional[Tuple[int, ...]] = None

    _out: List[FrozenSet[int]] = PrivateAttr(default_factory=list)
    _in: List[FrozenSet[int]] = PrivateAttr(default_factory=list)
    # weak components of D[N+(v)] per vertex, ordered by smallest head
    _components: List[List[FrozenSet[int]]] = PrivateAttr(default_factory=list)

    @field_validator("arcs", mode="before")
    @classmethod
    def _reject_loops(cls, value: Any, info: ValidationInfo):
        n = info.data.get("n")
        arcs = set()
        for arc in value:
            try:
                u, v = (int(x) for x in arc)
            except (TypeError, ValueError):
                raise ValueError(f"malformed arc {arc!r}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if n is not None and (min(u, v) < 0 or max(u, v) >= n):
                raise ValueError(f"arc {(u, v)} has an endpoint outside 0..{n - 1}")
            if (v, u) in arcs:
                raise ValueError(f"arcs {(v, u)} and {(u, v)} form a digon")
            arcs.add((u, v))
        return frozenset(arcs)

    @model_validator(mode="after")
    def _check_labels(self):
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")
        return self

    def model_post_init(self, __context: Any) -> None:
        out_sets: List[Set[int]] = [set() for _ in range(self.n)]
        in_sets: List[Set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out_sets[u].add(v)
            in_sets[v].add(u)
        self._out = [frozenset(s) for s in out_sets]
        self._in = [frozenset(s) for s in in_sets]
        self._components = [_weak_components(out_sets[v], out_sets, in_sets) for v in range(self.n)]

    @classmethod
    def unchecked(cls, n: int, arcs: FrozenSet[Arc]) -> "OrientedGraph":
        """Build without validation from in-range, loop-free, digon-free arcs."""
        return cls.model_construct(n=n, arcs=arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> "OrientedGraph":
        return cls(n=n, arcs=frozenset(tuple(a) for a in arcs))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def out_neighbors(self, v: int) -> FrozenSet[int]:
        _require_vertex(self, v)
        return self._out[v]

    def in_neighbors(self, v: int) -> FrozenSet[int]:
        _require_vertex(self, v)
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def underlying_edges(self) -> List[Tuple[int, int]]:
        return sorted((min(u, v), max(u, v)) for u, v in self.arcs)


def _require_vertex(D: OrientedGraph, v: int) -> None:
    if not 0 <= v < D.n:
        raise InvalidArgumentError(f"vertex {v} out of range for n={D.n}")


def out_components(D: OrientedGraph, v: int) -> List[FrozenSet[int]]:
    """Weak components of D[N+(v)], ordered by their smallest vertex."""
    _require_vertex(D, v)
    return list(D._components[v])


def out_component_number(D: OrientedGraph, v: int) -> int:
    _require_vertex(D, v)
    return len(D._components[v])


def enumerate_directed_triangles(D: OrientedGraph) -> TriangleSet:
    """Triples whose induced subdigraph is a directed 3-cycle."""
    found = []
    for u in range(D.n):
        for v in D._out[u]:
            if v < u:
                continue
            for w in D._out[v]:
                if w > u and u in D._out[w]:
                    found.append((u, v, w))
    return TriangleSet(triples=found)


def directed_triangle_witness(D: OrientedGraph) -> Optional[Triple]:
    return enumerate_directed_triangles(D).witness()


def degree_profile(D: OrientedGraph) -> DegreeProfile:
    return DegreeProfile(
        in_degrees=tuple(len(s) for s in D._in),
        out_degrees=tuple(len(s) for s in D._out),
        out_component_numbers=tuple(len(c) for c in D._components),
    )


def induced_subdigraph(D: OrientedGraph, S: Iterable[int]) -> OrientedGraph:
    """D[S], reindexed to 0..|S|-1 in increasing order of original id."""
    chosen = sorted(set(S))
    for v in chosen:
        _require_vertex(D, v)
    index = {v: i for i, v in enumerate(chosen)}
    arcs = frozenset(
        (index[u], index[v]) for u, v in D.arcs if u in index and v in index
    )
    base = D.labels
    labels = tuple(base[v] for v in chosen) if base is not None else tuple(chosen)
    return OrientedGraph(n=len(chosen), arcs=arcs, labels=labels)


def delete_vertices(D: OrientedGraph, S: Iterable[int]) -> OrientedGraph:
    removed = set(S)
    for v in removed:
        _require_vertex(D, v)
    return induced_subdigraph(D, (v for v in range(D.n) if v not in removed))


def underlying_graph(D: OrientedGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(D.n))
    H.add_edges_from(D.arcs)
    return H

