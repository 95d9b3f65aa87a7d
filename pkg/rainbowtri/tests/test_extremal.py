import pytest
from pydantic import ValidationError

from rainbowtri.colored_graph import ColoredGraph, color_degree, color_number, enumerate_rainbow_triangles
from rainbowtri.errors import InvalidArgumentError
from rainbowtri.extremal import (
    generate,
    k4_exception,
    k4_minus_edge_exception,
    oriented_balanced_bipartite,
    rainbow_balanced_bipartite,
    sharp_complete_coloring,
)
from rainbowtri.models import GeneratorSpec
from rainbowtri.oriented_graph import OrientedGraph, degree_profile
from rainbowtri.protocol import GeneratorFamily


def test_sharp_complete_small_cases():
    assert sharp_complete_coloring(1).edge_count == 0
    G = sharp_complete_coloring(4)
    assert G.edge_count == 6
    assert color_number(G) == 3
    assert G.color(0, 3) == 1 and G.color(2, 3) == 3


def test_sharp_complete_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        sharp_complete_coloring(0)


@pytest.mark.parametrize("n, edges", [(2, 1), (5, 6), (9, 20)])
def test_rainbow_bipartite_sizes(n, edges):
    G = rainbow_balanced_bipartite(n)
    assert G.edge_count == edges == n * n // 4
    assert color_number(G) == edges
    assert len(enumerate_rainbow_triangles(G)) == 0


def test_oriented_bipartite_all_one_way():
    D = oriented_balanced_bipartite(2)
    assert D.sorted_arcs() == [(0, 1)]
    profile = degree_profile(oriented_balanced_bipartite(4))
    assert profile.in_degrees == (0, 0, 2, 2)
    assert profile.out_component_numbers == (2, 2, 0, 0)


def test_oriented_bipartite_seeded_is_reproducible():
    D1 = oriented_balanced_bipartite(8, seed=5)
    D2 = oriented_balanced_bipartite(8, seed=5)
    assert D1 == D2
    assert D1.arc_count == 16
    assert all((u < 4) != (v < 4) for u, v in D1.arcs)


@pytest.mark.parametrize("n", [0, 3, 7])
def test_oriented_bipartite_rejects_odd_or_empty(n):
    with pytest.raises(InvalidArgumentError):
        oriented_balanced_bipartite(n)


def test_k4_fixtures():
    assert k4_exception().edge_count == 6
    minus = k4_minus_edge_exception()
    assert minus.edge_count == 5
    assert not minus.has_edge(2, 3)
    assert all(color_degree(minus, v) == 2 for v in range(4))


def test_generate_dispatch():
    assert isinstance(generate(GeneratorSpec(family=GeneratorFamily.SHARP_COMPLETE, n=5)), ColoredGraph)
    assert generate(GeneratorSpec(family=GeneratorFamily.K4_EXCEPTION, n=4)) == k4_exception()
    D = generate(GeneratorSpec(family=GeneratorFamily.ORIENTED_BALANCED_BIPARTITE, n=6, orientation_seed=1))
    assert isinstance(D, OrientedGraph)
    assert D == oriented_balanced_bipartite(6, 1)


def test_generator_spec_constraints():
    with pytest.raises(ValidationError):
        GeneratorSpec(family=GeneratorFamily.K4_MINUS_EDGE_EXCEPTION, n=5)
    with pytest.raises(ValidationError):
        GeneratorSpec(family=GeneratorFamily.ORIENTED_BALANCED_BIPARTITE, n=5)
    with pytest.raises(ValidationError):
        GeneratorSpec(family=GeneratorFamily.SHARP_COMPLETE, n=5, orientation_seed=3)
