"""Hypothesis strategies for colored and oriented graphs."""

from itertools import combinations

from hypothesis import strategies as st

from rainbowtri.colored_graph import ColoredGraph
from rainbowtri.oriented_graph import OrientedGraph


@st.composite
def colored_graphs(draw: st.DrawFn, min_n: int = 0, max_n: int = 8, max_colors: int = 6) -> ColoredGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    coloring = {}
    for pair in combinations(range(n), 2):
        if draw(st.booleans()):
            coloring[pair] = draw(st.integers(min_value=1, max_value=max_colors))
    return ColoredGraph(n=n, coloring=coloring)


@st.composite
def oriented_graphs(draw: st.DrawFn, min_n: int = 0, max_n: int = 8) -> OrientedGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    arcs = []
    for u, v in combinations(range(n), 2):
        choice = draw(st.sampled_from((0, 1, 2)))
        if choice == 1:
            arcs.append((u, v))
        elif choice == 2:
            arcs.append((v, u))
    return OrientedGraph(n=n, arcs=frozenset(arcs))
