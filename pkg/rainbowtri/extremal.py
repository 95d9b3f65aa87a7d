"""
Extremal Constructions
Sharp and exceptional instances: each sits exactly at (or just below) one of
the thresholds in theorems.py without containing the triangle it guards.
"""

import logging
import random
from typing import Dict, Optional, Tuple, Union

from rainbowtri.colored_graph import ColoredGraph, Edge
from rainbowtri.errors import InvalidArgumentError
from rainbowtri.models import GeneratorSpec
from rainbowtri.oriented_graph import Arc, OrientedGraph
from rainbowtri.protocol import GeneratorFamily

_logger = logging.getLogger(__name__)

K4_EXCEPTION_COLORING: Dict[Edge, int] = {
    (0, 1): 1, (0, 2): 1, (2, 3): 1,
    (0, 3): 2, (1, 2): 2, (1, 3): 2,
}
K4_MINUS_EDGE_COLORING: Dict[Edge, int] = {
    (0, 1): 1, (0, 2): 1, (1, 3): 1,
    (1, 2): 2, (0, 3): 2,
}


def _require_positive(n: int) -> None:
    if n < 1:
        raise InvalidArgumentError(f"n must be at least 1, got {n}")


def _sides(n: int) -> Tuple[range, range]:
    half = (n + 1) // 2
    return range(half), range(half, n)


def sharp_complete_coloring(n: int) -> ColoredGraph:
    """K_n where edge {i, j}, i < j, gets color i + 1.

    e + c and the color-degree sum both equal n(n+1)/2 - 1, and every
    triangle i < j < k repeats color i + 1.
    """
    _require_positive(n)
    coloring = {(i, j): i + 1 for i in range(n) for j in range(i + 1, n)}
    return ColoredGraph(n=n, coloring=coloring)


def rainbow_balanced_bipartite(n: int) -> ColoredGraph:
    """K_{ceil(n/2), floor(n/2)} with pairwise distinct colors 1, 2, ..."""
    _require_positive(n)
    left, right = _sides(n)
    edges = [(x, y) for x in left for y in right]
    return ColoredGraph(n=n, coloring={edge: i for i, edge in enumerate(edges, start=1)})


def oriented_balanced_bipartite(n: int, seed: Optional[int] = None) -> OrientedGraph:
    """
    An orientation of K_{n/2,n/2} on sides 0..n/2-1 and n/2..n-1.

    Args:
        n: Even vertex count
        seed: None orients every arc from the first side to the second;
              otherwise each arc direction is a coin flip from random.Random(seed)

    Returns:
        OrientedGraph
    """
    if n < 2 or n % 2:
        raise InvalidArgumentError(f"oriented balanced bipartite graphs need an even n >= 2, got {n}")
    left, right = _sides(n)
    rng = random.Random(seed) if seed is not None else None
    arcs = []
    for x in left:
        for y in right:
            arc: Arc = (y, x) if rng is not None and rng.random() < 0.5 else (x, y)
            arcs.append(arc)
    return OrientedGraph(n=n, arcs=frozenset(arcs))


def k4_exception() -> ColoredGraph:
    return ColoredGraph(n=4, coloring=K4_EXCEPTION_COLORING)


def k4_minus_edge_exception() -> ColoredGraph:
    return ColoredGraph(n=4, coloring=K4_MINUS_EDGE_COLORING)


def generate(spec: GeneratorSpec) -> Union[ColoredGraph, OrientedGraph]:
    _logger.debug(f"Generating {spec.family.value} with n={spec.n}")
    if spec.family == GeneratorFamily.SHARP_COMPLETE:
        return sharp_complete_coloring(spec.n)
    if spec.family == GeneratorFamily.RAINBOW_BIPARTITE:
        return rainbow_balanced_bipartite(spec.n)
    if spec.family == GeneratorFamily.ORIENTED_BALANCED_BIPARTITE:
        return oriented_balanced_bipartite(spec.n, spec.orientation_seed)
    if spec.family == GeneratorFamily.K4_EXCEPTION:
        return k4_exception()
    return k4_minus_edge_exception()
