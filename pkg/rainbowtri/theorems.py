"""
Theorem Checkers
Condition checkers and conclusion classifiers for the rainbow-triangle and
directed-triangle results. Every checker is a pure function returning a
TheoremVerdict; all thresholds are compared in integer arithmetic.

A Violation means the implementation is wrong, not the theorem: the verdict
carries the serialized instance so it can be replayed with the CLI.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple, Union

import networkx as nx

from rainbowtri import colored_graph as cg
from rainbowtri import oriented_graph as og
from rainbowtri.colored_graph import ColoredGraph
from rainbowtri.errors import InvalidArgumentError, PreconditionViolation
from rainbowtri.graph_io import serialize
from rainbowtri.models import TheoremVerdict, Triple, Witness
from rainbowtri.oriented_graph import OrientedGraph
from rainbowtri.protocol import COLORED_THEOREMS, ORIENTED_THEOREMS, Conclusion, TheoremId
from rainbowtri.reductions import (
    associated_colored_graph,
    color_degree_deficits,
    color_degree_preserving_reduction,
    deficit_witness,
    head_uniqueness_violations,
    orient,
)

_logger = logging.getLogger(__name__)

Graph = Union[ColoredGraph, OrientedGraph]
Bipartition = Tuple[Tuple[int, ...], Tuple[int, ...]]


@lru_cache(maxsize=None)
def _not_met(theorem_id: TheoremId) -> TheoremVerdict:
    # verdicts are frozen, so one instance per checker is shared
    return TheoremVerdict(theorem_id=theorem_id, condition_met=False, conclusion=Conclusion.NOT_APPLICABLE)


def _violation(theorem_id: TheoremId, graph: Graph, detail: str) -> TheoremVerdict:
    _logger.error(f"{theorem_id.value} violated: {detail}")
    return TheoremVerdict(
        theorem_id=theorem_id,
        condition_met=True,
        conclusion=Conclusion.VIOLATION,
        witness=Witness(instance=serialize(graph), detail=detail),
    )


def _found(theorem_id: TheoremId, conclusion: Conclusion, triangle: Triple) -> TheoremVerdict:
    return TheoremVerdict(
        theorem_id=theorem_id,
        condition_met=True,
        conclusion=conclusion,
        witness=Witness(triangle=triangle),
    )


def _rainbow_verdict(theorem_id: TheoremId, G: ColoredGraph, condition_met: bool) -> TheoremVerdict:
    if not condition_met:
        return _not_met(theorem_id)
    triangle = cg.rainbow_triangle_witness(G)
    if triangle is None:
        return _violation(theorem_id, G, "condition met but no rainbow triangle")
    return _found(theorem_id, Conclusion.HAS_RAINBOW, triangle)


def _color_degrees(G: ColoredGraph):
    return [cg.color_degree(G, v) for v in range(G.n)]


def _balanced_bipartition(H: nx.Graph, n: int, edge_count: int) -> Optional[Bipartition]:
    """Sides of H when H is K_{n/2,n/2}, side holding vertex 0 first; else None.

    A bipartite graph on n vertices has at most n^2/4 edges, with equality only
    for the complete balanced one.
    """
    if n < 2 or n % 2 or edge_count != n * n // 4 or not nx.is_bipartite(H):
        return None
    left, right = nx.bipartite.sets(H)
    if len(left) != len(right):
        return None
    if 0 not in left:
        left, right = right, left
    return tuple(sorted(left)), tuple(sorted(right))


def check_t1(G: ColoredGraph) -> TheoremVerdict:
    """e(G) + c(G) >= n(n+1)/2 forces a rainbow triangle."""
    n = G.n
    met = n > 0 and 2 * (G.edge_count + cg.color_number(G)) >= n * (n + 1)
    return _rainbow_verdict(TheoremId.T1, G, met)


def check_t2(G: ColoredGraph) -> TheoremVerdict:
    """Sum of color degrees >= n(n+1)/2 forces a rainbow triangle."""
    n = G.n
    met = n > 0 and 2 * sum(_color_degrees(G)) >= n * (n + 1)
    return _rainbow_verdict(TheoremId.T2, G, met)


def check_cor1(G: ColoredGraph) -> TheoremVerdict:
    n = G.n
    met = n > 0 and 2 * min(_color_degrees(G)) >= n + 1
    return _rainbow_verdict(TheoremId.COR1, G, met)


def check_color_number_bound(G: ColoredGraph) -> TheoremVerdict:
    """More than floor(n^2/4) colors forces a rainbow triangle."""
    n = G.n
    met = n > 0 and cg.color_number(G) > n * n // 4
    return _rainbow_verdict(TheoremId.CN, G, met)


def classify_t3(G: ColoredGraph) -> TheoremVerdict:
    """
    Minimum color degree >= n/2: a rainbow triangle exists, or G is
    K_{n/2,n/2}, or G is one of the two n=4 exceptions (K_4 and K_4 - e).

    Returns:
        TheoremVerdict whose witness is the triangle or the bipartition
    """
    n = G.n
    if n == 0 or 2 * min(_color_degrees(G)) < n:
        return _not_met(TheoremId.T3)

    triangle = cg.rainbow_triangle_witness(G)
    if triangle is not None:
        return _found(TheoremId.T3, Conclusion.HAS_RAINBOW, triangle)

    bipartition = _balanced_bipartition(cg.underlying_graph(G), n, G.edge_count)
    if bipartition is not None:
        return TheoremVerdict(
            theorem_id=TheoremId.T3,
            condition_met=True,
            conclusion=Conclusion.BALANCED_COMPLETE_BIPARTITE,
            witness=Witness(bipartition=bipartition),
        )
    if n == 4 and G.edge_count == 6:
        return TheoremVerdict(theorem_id=TheoremId.T3, condition_met=True, conclusion=Conclusion.K4_EXCEPTION)
    if n == 4 and G.edge_count == 5:
        return TheoremVerdict(
            theorem_id=TheoremId.T3, condition_met=True, conclusion=Conclusion.K4_MINUS_EDGE_EXCEPTION
        )
    return _violation(TheoremId.T3, G, "no rainbow triangle and not an allowed extremal graph")


def _directed_verdict(theorem_id: TheoremId, D: OrientedGraph, condition_met: bool) -> TheoremVerdict:
    if not condition_met:
        return _not_met(theorem_id)
    triangle = og.directed_triangle_witness(D)
    if triangle is None:
        return _violation(theorem_id, D, "condition met but no directed triangle")
    return _found(theorem_id, Conclusion.HAS_DIRECTED_TRIANGLE, triangle)


def check_t4(D: OrientedGraph) -> TheoremVerdict:
    """a(D) + sum of out-component numbers >= n(n+1)/2 forces a directed triangle."""
    n = D.n
    profile = og.degree_profile(D)
    met = n > 0 and 2 * (profile.arc_count + sum(profile.out_component_numbers)) >= n * (n + 1)
    return _directed_verdict(TheoremId.T4, D, met)


def classify_t5(D: OrientedGraph) -> TheoremVerdict:
    n = D.n
    if n == 0 or 2 * min(og.degree_profile(D).in_plus_components()) < n:
        return _not_met(TheoremId.T5)

    triangle = og.directed_triangle_witness(D)
    if triangle is not None:
        return _found(TheoremId.T5, Conclusion.HAS_DIRECTED_TRIANGLE, triangle)

    bipartition = _balanced_bipartition(og.underlying_graph(D), n, D.arc_count)
    if bipartition is not None:
        return TheoremVerdict(
            theorem_id=TheoremId.T5,
            condition_met=True,
            conclusion=Conclusion.ORIENTATION_OF_BALANCED_BIPARTITE,
            witness=Witness(bipartition=bipartition),
        )
    return _violation(TheoremId.T5, D, "no directed triangle and not an orientation of K_{n/2,n/2}")


def below_shen_threshold(k: int, n: int) -> bool:
    """True when k < (3 - sqrt 7) * n, decided exactly.

    For k < 3n both sides of sqrt(7)*n > 3n - k are positive, so squaring
    keeps the order.
    """
    if k < 0 or n < 0:
        raise InvalidArgumentError(f"k and n must be nonnegative, got k={k}, n={n}")
    if k >= 3 * n:
        return False
    return (3 * n - k) ** 2 > 7 * n * n


def check_t6(D: OrientedGraph) -> TheoremVerdict:
    """Minimum in-degree >= (3 - sqrt 7) n forces a directed triangle."""
    n = D.n
    met = n > 0 and not below_shen_threshold(min(D.in_degree(v) for v in range(n)), n)
    return _directed_verdict(TheoremId.T6, D, met)


def check_ch(D: OrientedGraph) -> TheoremVerdict:
    """Minimum in-degree >= n/3. A miss is a conjecture counterexample, not a defect."""
    n = D.n
    if n == 0 or 3 * min(D.in_degree(v) for v in range(n)) < n:
        return _not_met(TheoremId.CH)
    triangle = og.directed_triangle_witness(D)
    if triangle is not None:
        return _found(TheoremId.CH, Conclusion.HAS_DIRECTED_TRIANGLE, triangle)
    _logger.warning(f"min in-degree >= n/3 without a directed triangle (n={n})")
    return TheoremVerdict(
        theorem_id=TheoremId.CH,
        condition_met=True,
        conclusion=Conclusion.CONJECTURE_COUNTEREXAMPLE,
        witness=Witness(instance=serialize(D), detail="min in-degree >= n/3, no directed triangle"),
    )


def _claims_hold(theorem_id: TheoremId, detail: str) -> TheoremVerdict:
    return TheoremVerdict(
        theorem_id=theorem_id,
        condition_met=True,
        conclusion=Conclusion.CLAIMS_HOLD,
        witness=Witness(detail=detail),
    )


def check_pipeline(G: ColoredGraph) -> TheoremVerdict:
    """Run reduce-then-orient on G and check what the construction guarantees."""
    if G.n == 0:
        return _not_met(TheoremId.PIPELINE)

    reduced = color_degree_preserving_reduction(G)
    if _color_degrees(reduced) != _color_degrees(G):
        return _violation(TheoremId.PIPELINE, G, "reduction changed a color degree")
    try:
        result = orient(reduced)
    except PreconditionViolation as e:
        return _violation(TheoremId.PIPELINE, G, f"reduction left a removable edge {e.edge}")

    broken = head_uniqueness_violations(result)
    if broken:
        return _violation(TheoremId.PIPELINE, G, f"color not unique at head of arcs {broken}")

    rainbow = cg.enumerate_rainbow_triangles(reduced)
    deficits = color_degree_deficits(result)
    for v in sorted(deficits):
        triangle = deficit_witness(result, v)
        if triangle is None or triangle not in rainbow:
            return _violation(TheoremId.PIPELINE, G, f"vertex {v} has a color-degree deficit without a rainbow triangle")

    directed = og.enumerate_directed_triangles(result.digraph)
    stray = [t for t in directed.sorted_triples() if t not in rainbow]
    if stray:
        return _violation(TheoremId.PIPELINE, G, f"directed triangles {stray} are not rainbow")

    if cg.rainbow_triangle_witness(G) is None and (deficits or len(directed)):
        return _violation(TheoremId.PIPELINE, G, "rainbow-free input oriented with a deficit or a directed triangle")

    removed = G.edge_count - reduced.edge_count
    return _claims_hold(TheoremId.PIPELINE, f"removed {removed} edges, {len(deficits)} deficit vertices")


def check_correspondence(D: OrientedGraph) -> TheoremVerdict:
    """Directed triangles of D against rainbow triangles of its associated coloring."""
    if D.n == 0:
        return _not_met(TheoremId.CORRESPONDENCE)

    G = associated_colored_graph(D).graph
    directed = og.enumerate_directed_triangles(D)
    if directed != cg.enumerate_rainbow_triangles(G):
        return _violation(TheoremId.CORRESPONDENCE, D, "directed and rainbow triangle sets differ")

    profile = og.degree_profile(D)
    if G.edge_count != D.arc_count:
        return _violation(TheoremId.CORRESPONDENCE, D, "associated graph lost or gained an edge")
    if cg.color_number(G) != sum(profile.out_component_numbers):
        return _violation(TheoremId.CORRESPONDENCE, D, "color count differs from the out-component total")
    if tuple(_color_degrees(G)) != profile.in_plus_components():
        return _violation(TheoremId.CORRESPONDENCE, D, "color degree differs from d- + w+ at some vertex")
    return _claims_hold(TheoremId.CORRESPONDENCE, f"{len(directed)} matching triangles")


CHECKERS: Dict[TheoremId, Callable[[Graph], TheoremVerdict]] = {
    TheoremId.T1: check_t1,
    TheoremId.T2: check_t2,
    TheoremId.COR1: check_cor1,
    TheoremId.T3: classify_t3,
    TheoremId.CN: check_color_number_bound,
    TheoremId.PIPELINE: check_pipeline,
    TheoremId.T4: check_t4,
    TheoremId.T5: classify_t5,
    TheoremId.T6: check_t6,
    TheoremId.CH: check_ch,
    TheoremId.CORRESPONDENCE: check_correspondence,
}


def evaluate(theorem_id: TheoremId, graph: Graph) -> TheoremVerdict:
    """Dispatch to the checker for theorem_id after checking the graph type."""
    expects_colored = theorem_id in COLORED_THEOREMS
    if expects_colored and not isinstance(graph, ColoredGraph):
        raise InvalidArgumentError(f"{theorem_id.value} needs a colored graph")
    if theorem_id in ORIENTED_THEOREMS and not isinstance(graph, OrientedGraph):
        raise InvalidArgumentError(f"{theorem_id.value} needs an oriented graph")
    return CHECKERS[theorem_id](graph)
