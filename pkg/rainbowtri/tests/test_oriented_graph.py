import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from rainbowtri.errors import InvalidArgumentError
from rainbowtri.extremal import oriented_balanced_bipartite
from rainbowtri.oriented_graph import (
    OrientedGraph,
    degree_profile,
    delete_vertices,
    directed_triangle_witness,
    enumerate_directed_triangles,
    induced_subdigraph,
    out_component_number,
    out_components,
)
from rainbowtri.tests import oracles
from rainbowtri.tests.strategies import oriented_graphs


def test_rejects_digon():
    with pytest.raises(ValidationError):
        OrientedGraph(n=2, arcs=frozenset({(0, 1), (1, 0)}))


def test_rejects_loop():
    with pytest.raises(ValidationError):
        OrientedGraph.from_arcs(2, [(1, 1)])


def test_rejects_out_of_range():
    with pytest.raises(ValidationError, match="outside"):
        OrientedGraph.from_arcs(2, [(0, 2)])


def test_negative_tail_is_rejected_not_wrapped():
    with pytest.raises(ValidationError, match="outside"):
        OrientedGraph.from_arcs(3, [(-1, 0)])


def test_degrees(transitive_t3):
    assert transitive_t3.out_neighbors(0) == frozenset({1, 2})
    assert transitive_t3.in_degree(2) == 2
    with pytest.raises(InvalidArgumentError):
        transitive_t3.out_degree(3)


def test_source_of_transitive_tournament_has_one_out_component(transitive_t3):
    assert out_components(transitive_t3, 0) == [frozenset({1, 2})]
    assert out_component_number(transitive_t3, 2) == 0


def test_independent_heads_are_separate_components():
    D = oriented_balanced_bipartite(4)
    assert out_components(D, 0) == [frozenset({2}), frozenset({3})]


def test_out_components_use_weak_connectivity():
    # heads 1, 2, 3 with 2 -> 1 and 2 -> 3: one weak component
    D = OrientedGraph.from_arcs(4, [(0, 1), (0, 2), (0, 3), (2, 1), (2, 3)])
    assert out_component_number(D, 0) == 1


def test_directed_c3(directed_c3, transitive_t3):
    assert enumerate_directed_triangles(directed_c3).sorted_triples() == [(0, 1, 2)]
    assert directed_triangle_witness(transitive_t3) is None


def test_witness_is_lexicographically_smallest():
    D = OrientedGraph.from_arcs(5, [(2, 3), (3, 4), (4, 2), (0, 1), (1, 4), (4, 0)])
    assert directed_triangle_witness(D) == (0, 1, 4)


def test_degree_profile(transitive_t3):
    profile = degree_profile(transitive_t3)
    assert profile.in_degrees == (0, 1, 2)
    assert profile.out_component_numbers == (1, 1, 0)
    assert profile.in_plus_components() == (1, 2, 2)
    assert profile.arc_count == 3


def test_induced_subdigraph_reindexes_and_records_labels():
    D = OrientedGraph.from_arcs(4, [(0, 1), (1, 3), (3, 0), (2, 3)])
    H = induced_subdigraph(D, [3, 1, 0])
    assert H.n == 3
    assert H.labels == (0, 1, 3)
    assert H.sorted_arcs() == [(0, 1), (1, 2), (2, 0)]


def test_labels_compose_across_deletions():
    D = OrientedGraph.from_arcs(5, [(0, 4), (4, 2)])
    H = delete_vertices(delete_vertices(D, [1]), [0])
    assert H.labels == (2, 3, 4)
    assert H.sorted_arcs() == [(2, 0)]


@settings(max_examples=200, deadline=None)
@given(oriented_graphs(max_n=9))
def test_directed_triangles_match_oracle(D):
    assert set(enumerate_directed_triangles(D).triples) == oracles.directed_triangles(D)


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(max_n=9))
def test_out_component_numbers_match_oracle(D):
    for v in range(D.n):
        assert out_component_number(D, v) == oracles.out_component_number(D, v)


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(max_n=8))
def test_out_components_partition_out_neighborhood(D):
    for v in range(D.n):
        parts = out_components(D, v)
        assert frozenset().union(*parts) == D.out_neighbors(v)
        assert sum(map(len, parts)) == D.out_degree(v)


@settings(max_examples=200, deadline=None)
@given(oriented_graphs(max_n=8))
def test_every_head_is_its_own_component_iff_out_neighborhood_is_independent(D):
    for v in range(D.n):
        heads = D.out_neighbors(v)
        independent = not any(D.has_arc(a, b) for a in heads for b in heads)
        assert (out_component_number(D, v) == D.out_degree(v)) == independent
