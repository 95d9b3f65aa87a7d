import pytest
from hypothesis import given, settings

from rainbowtri.colored_graph import ColoredGraph, color_degree, enumerate_rainbow_triangles
from rainbowtri.errors import InvalidArgumentError
from rainbowtri.extremal import (
    oriented_balanced_bipartite,
    rainbow_balanced_bipartite,
    sharp_complete_coloring,
)
from rainbowtri.harness import enumerate_colored_graphs, enumerate_oriented_graphs
from rainbowtri.oriented_graph import (
    OrientedGraph,
    degree_profile,
    delete_vertices,
    enumerate_directed_triangles,
    out_components,
)
from rainbowtri.protocol import Conclusion, TheoremId
from rainbowtri.reductions import associated_colored_graph, reduce_and_orient
from rainbowtri.theorems import (
    below_shen_threshold,
    check_ch,
    check_color_number_bound,
    check_correspondence,
    check_cor1,
    check_pipeline,
    check_t1,
    check_t2,
    check_t4,
    check_t6,
    classify_t3,
    classify_t5,
    evaluate,
)
from rainbowtri.tests.strategies import colored_graphs, oriented_graphs


def test_t1_rainbow_k3(rainbow_k3):
    verdict = check_t1(rainbow_k3)
    assert verdict.condition_met
    assert verdict.conclusion == Conclusion.HAS_RAINBOW
    assert verdict.witness.triangle == (0, 1, 2)


@pytest.mark.parametrize("n", [3, 4, 10, 25])
def test_sharp_complete_misses_t1_and_t2_by_one(n):
    G = sharp_complete_coloring(n)
    assert not check_t1(G).condition_met
    assert not check_t2(G).condition_met
    assert check_t1(G).conclusion == Conclusion.NOT_APPLICABLE


@pytest.mark.parametrize("n", [3, 5, 8])
def test_rainbow_bipartite_misses_t1(n):
    assert not check_t1(rainbow_balanced_bipartite(n)).condition_met


def test_t2_rainbow_k4(rainbow_k4):
    assert check_t2(rainbow_k4).conclusion == Conclusion.HAS_RAINBOW


def test_cor1():
    k5 = ColoredGraph(n=5, coloring={(u, v): 10 * u + v for u in range(5) for v in range(u + 1, 5)})
    assert check_cor1(k5).conclusion == Conclusion.HAS_RAINBOW
    assert not check_cor1(rainbow_balanced_bipartite(4)).condition_met


def test_color_number_bound_is_sharp():
    assert not check_color_number_bound(rainbow_balanced_bipartite(9)).condition_met
    G = ColoredGraph(n=3, coloring={(0, 1): 1, (0, 2): 2, (1, 2): 3})
    assert check_color_number_bound(G).conclusion == Conclusion.HAS_RAINBOW


def test_empty_vertex_set_is_never_met():
    assert not check_t1(ColoredGraph(n=0)).condition_met
    assert not classify_t3(ColoredGraph(n=0)).condition_met
    assert not check_t4(OrientedGraph(n=0)).condition_met
    assert not check_ch(OrientedGraph(n=0)).condition_met


def test_t3_exceptions(validated_k4_fixtures):
    k4, k4_minus = validated_k4_fixtures
    assert classify_t3(k4).conclusion == Conclusion.K4_EXCEPTION
    assert classify_t3(k4_minus).conclusion == Conclusion.K4_MINUS_EDGE_EXCEPTION


def test_t3_balanced_bipartite():
    verdict = classify_t3(rainbow_balanced_bipartite(6))
    assert verdict.conclusion == Conclusion.BALANCED_COMPLETE_BIPARTITE
    assert verdict.witness.bipartition == ((0, 1, 2), (3, 4, 5))


def test_t3_single_edge_is_k11():
    verdict = classify_t3(ColoredGraph(n=2, coloring={(0, 1): 1}))
    assert verdict.conclusion == Conclusion.BALANCED_COMPLETE_BIPARTITE


def test_t3_not_met_on_a_single_vertex():
    assert not classify_t3(ColoredGraph(n=1)).condition_met


def test_t4(directed_c3, transitive_t3):
    assert check_t4(directed_c3).conclusion == Conclusion.HAS_DIRECTED_TRIANGLE
    assert not check_t4(transitive_t3).condition_met
    assert not check_t4(OrientedGraph(n=4)).condition_met


def test_t5(directed_c3):
    assert classify_t5(directed_c3).conclusion == Conclusion.HAS_DIRECTED_TRIANGLE
    verdict = classify_t5(oriented_balanced_bipartite(4))
    assert verdict.conclusion == Conclusion.ORIENTATION_OF_BALANCED_BIPARTITE
    assert verdict.witness.bipartition == ((0, 1), (2, 3))


def test_t5_transitive_tournament_not_met():
    D = OrientedGraph.from_arcs(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert not classify_t5(D).condition_met


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_t5_never_finds_triangles_in_bipartite_orientations(seed):
    assert classify_t5(oriented_balanced_bipartite(6, seed)).conclusion != Conclusion.HAS_DIRECTED_TRIANGLE


@pytest.mark.parametrize("k, n, expected", [
    (1, 3, True),    # 1 < 1.0627
    (2, 5, False),   # 2 >= 1.771
    (1, 5, True),
    (0, 0, False),
    (4, 11, False),  # 4 >= 3.896
    (3, 11, True),
    (30, 10, False),
])
def test_shen_threshold(k, n, expected):
    assert below_shen_threshold(k, n) is expected


def test_shen_threshold_rejects_negatives():
    with pytest.raises(InvalidArgumentError):
        below_shen_threshold(-1, 3)


def test_t6(directed_c3):
    assert not check_t6(directed_c3).condition_met
    assert not check_t6(OrientedGraph(n=5)).condition_met


def test_ch(directed_c3, transitive_t3):
    assert check_ch(directed_c3).conclusion == Conclusion.HAS_DIRECTED_TRIANGLE
    assert not check_ch(transitive_t3).condition_met


def test_violation_serializes_instance(monkeypatch, rainbow_k3):
    monkeypatch.setattr("rainbowtri.colored_graph.rainbow_triangle_witness", lambda G: None)
    verdict = check_t1(rainbow_k3)
    assert verdict.is_violation
    assert verdict.witness.instance.startswith("ecg 3 3")


def test_evaluate_rejects_wrong_graph_type(rainbow_k3, directed_c3):
    with pytest.raises(InvalidArgumentError):
        evaluate(TheoremId.T4, rainbow_k3)
    with pytest.raises(InvalidArgumentError):
        evaluate(TheoremId.T1, directed_c3)
    assert evaluate(TheoremId.CH, directed_c3).condition_met


def test_pipeline_and_correspondence_hold(rainbow_k3, directed_c3):
    assert check_pipeline(rainbow_k3).conclusion == Conclusion.CLAIMS_HOLD
    assert check_correspondence(directed_c3).conclusion == Conclusion.CLAIMS_HOLD


def test_exhaustive_colored_n4_has_no_violation_and_both_exceptions():
    seen = set()
    for G in enumerate_colored_graphs(4):
        for checker in (check_t1, check_t2, check_cor1, check_color_number_bound, check_pipeline):
            assert not checker(G).is_violation
        seen.add(classify_t3(G).conclusion)
    assert Conclusion.VIOLATION not in seen
    assert {Conclusion.K4_EXCEPTION, Conclusion.K4_MINUS_EDGE_EXCEPTION} <= seen


def test_exhaustive_colored_condition_chain():
    for G in enumerate_colored_graphs(4):
        if check_cor1(G).condition_met:
            assert check_t2(G).condition_met
            assert classify_t3(G).condition_met


def test_t3_rainbow_free_instances_reduce_to_properly_colored_bipartite_orientations():
    for G in enumerate_colored_graphs(4):
        verdict = classify_t3(G)
        if verdict.conclusion != Conclusion.BALANCED_COMPLETE_BIPARTITE:
            continue
        result = reduce_and_orient(G)
        reduced = result.source
        for v in range(reduced.n):
            colors = list(reduced.neighbors(v).values())
            assert len(colors) == len(set(colors))
        left, right = verdict.witness.bipartition
        assert all((u in left) != (v in left) for u, v in result.digraph.arcs)


def _isolated_heads(D, v):
    return [next(iter(c)) for c in out_components(D, v) if len(c) == 1]


def test_shen_region_vertices_have_an_isolated_out_neighbor():
    # triangle-free D meeting the d- + w+ >= n/2 condition: a vertex below the
    # (3 - sqrt 7) n in-degree threshold has a singleton out-component
    for n in (4, 5):
        for D in enumerate_oriented_graphs(n):
            if not classify_t5(D).condition_met or enumerate_directed_triangles(D).witness() is not None:
                continue
            for v in range(n):
                if below_shen_threshold(D.in_degree(v), n):
                    assert _isolated_heads(D, v)


def test_deleting_a_vertex_and_an_isolated_head_costs_at_most_one():
    for D in enumerate_oriented_graphs(4):
        if not classify_t5(D).condition_met or enumerate_directed_triangles(D).witness() is not None:
            continue
        before = degree_profile(D).in_plus_components()
        for v in range(D.n):
            if not below_shen_threshold(D.in_degree(v), D.n):
                continue
            for w in _isolated_heads(D, v):
                rest = delete_vertices(D, [v, w])
                after = degree_profile(rest).in_plus_components()
                for i, original in enumerate(rest.labels):
                    assert after[i] >= before[original] - 1


def test_bipartite_outcome_splits_neighbors_of_v_and_w():
    for D in enumerate_oriented_graphs(4):
        if classify_t5(D).conclusion != Conclusion.ORIENTATION_OF_BALANCED_BIPARTITE:
            continue
        for v in range(D.n):
            for w in _isolated_heads(D, v):
                for u in set(range(D.n)) - {v, w}:
                    assert D.adjacent(u, v) != D.adjacent(u, w)


@settings(max_examples=200, deadline=None)
@given(colored_graphs(max_n=8, max_colors=4))
def test_met_conditions_never_violate(G):
    for checker in (check_t1, check_t2, check_cor1, classify_t3, check_color_number_bound, check_pipeline):
        assert not checker(G).is_violation


@settings(max_examples=200, deadline=None)
@given(oriented_graphs(max_n=8))
def test_t4_matches_t2_on_the_associated_coloring(D):
    G = associated_colored_graph(D).graph
    assert check_t4(D).condition_met == check_t2(G).condition_met
    assert not check_t4(D).is_violation
    assert not classify_t5(D).is_violation
    assert not check_correspondence(D).is_violation


@settings(max_examples=100, deadline=None)
@given(colored_graphs(min_n=1, max_n=8, max_colors=3))
def test_t3_witness_triangle_is_rainbow(G):
    verdict = classify_t3(G)
    if verdict.conclusion == Conclusion.HAS_RAINBOW:
        assert verdict.witness.triangle in enumerate_rainbow_triangles(G)
        assert 2 * min(color_degree(G, v) for v in range(G.n)) >= G.n
