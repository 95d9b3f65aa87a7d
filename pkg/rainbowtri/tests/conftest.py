import pytest

from rainbowtri.colored_graph import ColoredGraph
from rainbowtri.extremal import k4_exception, k4_minus_edge_exception
from rainbowtri.oriented_graph import OrientedGraph
from rainbowtri.settings import get_settings
from rainbowtri.tests import oracles


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive acceptance runs")


@pytest.fixture(scope="session", autouse=True)
def validated_k4_fixtures():
    # Both exceptional K_4 colorings must be rainbow-free with min color degree 2
    for G in (k4_exception(), k4_minus_edge_exception()):
        assert oracles.rainbow_triangles(G) == set()
        assert min(oracles.color_degree(G, v) for v in range(4)) == 2
    return k4_exception(), k4_minus_edge_exception()


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rainbow_k3():
    return ColoredGraph(n=3, coloring={(0, 1): 1, (0, 2): 2, (1, 2): 3})


@pytest.fixture
def rainbow_k4():
    return ColoredGraph(n=4, coloring={(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 4, (1, 3): 5, (2, 3): 6})


@pytest.fixture
def directed_c3():
    return OrientedGraph(n=3, arcs=frozenset({(0, 1), (1, 2), (2, 0)}))


@pytest.fixture
def transitive_t3():
    return OrientedGraph(n=3, arcs=frozenset({(0, 1), (0, 2), (1, 2)}))


@pytest.fixture
def write_graph(tmp_path):
    """Write graph-file text to a temporary file and return its path."""
    def _write(text: str, name: str = "graph.txt") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
