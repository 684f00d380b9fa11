import random

import networkx as nx
import pytest

from gpbc.graphs import Graph


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    return nxg


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Deterministic small connected graph: random tree plus extra edges."""
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    attempts = 0
    while len(edges) < n - 1 + extra_edges and attempts < 200:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b and (min(a, b), max(a, b)) not in edges:
            edges.add((min(a, b), max(a, b)))
        attempts += 1
    return Graph.from_edges(range(n), sorted(edges))


FIXTURE_GRAPHS = [random_connected_graph(5 + i % 9, (i * 7) % 5, seed=1000 + i) for i in range(20)]


def diamond_chain(stages: int) -> Graph:
    """Geodesic counts double per stage: sigma(s0, s_k) = 2**k."""
    vertices = ["s0"]
    edges = []
    prev = "s0"
    for i in range(stages):
        top, bottom, nxt = f"a{i}", f"b{i}", f"s{i + 1}"
        vertices += [top, bottom, nxt]
        edges += [(prev, top), (prev, bottom), (top, nxt), (bottom, nxt)]
        prev = nxt
    return Graph.from_edges(vertices, edges)


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    from gpbc import use_backend

    with use_backend(request.param):
        yield request.param
