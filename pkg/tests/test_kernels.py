"""Backend cross-checks: the numba and numpy kernels must agree exactly,
and both must match independent references on small graphs."""

import networkx as nx
import numpy as np
import pytest

import gpbc._kernels as kernels
from conftest import FIXTURE_GRAPHS, diamond_chain, to_networkx
from gpbc.graphs import build_gp, complete_graph, cycle_graph, path_graph, star_graph, wheel_graph
from gpbc.shortest_paths import bfs_dag

SAMPLE_GRAPHS = [
    build_gp(5, 2),
    build_gp(6, 2),
    build_gp(11, 2),
    build_gp(12, 2),
    build_gp(12, 5),
    build_gp(13, 4),
    path_graph(9),
    cycle_graph(8),
    star_graph(7),
    wheel_graph(9),
    complete_graph(6),
] + FIXTURE_GRAPHS[:8]


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=range(len(SAMPLE_GRAPHS)))
def test_backends_agree(g):
    indptr, indices = g.csr
    with kernels.use_backend("numba"):
        dist_a, sigma_a = kernels.all_pairs_counts(indptr, indices)
        dep_a, den_a = kernels.brandes_scaled(indptr, indices)
    with kernels.use_backend("numpy"):
        dist_b, sigma_b = kernels.all_pairs_counts(indptr, indices)
        dep_b, den_b = kernels.brandes_scaled(indptr, indices)
    assert np.array_equal(dist_a, dist_b)
    assert np.array_equal(sigma_a, sigma_b)
    assert np.array_equal(dep_a, dep_b)
    assert np.array_equal(den_a, den_b)


def test_sssp_matches_all_pairs_row(backend):
    g = build_gp(10, 3)
    indptr, indices = g.csr
    dist_all, sigma_all = kernels.all_pairs_counts(indptr, indices)
    for source in (0, 7, 15):
        dist_one, sigma_one = kernels.sssp_counts(indptr, indices, source)
        assert np.array_equal(dist_one, dist_all[source])
        assert np.array_equal(sigma_one, sigma_all[source])


@pytest.mark.parametrize("g", SAMPLE_GRAPHS[:11], ids=range(11))
def test_distances_match_networkx(backend, g):
    indptr, indices = g.csr
    dist, _ = kernels.all_pairs_counts(indptr, indices)
    nxg = to_networkx(g)
    for i, v in enumerate(g.vertices):
        lengths = nx.single_source_shortest_path_length(nxg, v)
        for j, w in enumerate(g.vertices):
            assert dist[i, j] == lengths.get(w, -1)


@pytest.mark.parametrize("g", [build_gp(8, 2), wheel_graph(7)] + FIXTURE_GRAPHS[:4], ids=range(6))
def test_sigma_matches_networkx_enumeration(backend, g):
    indptr, indices = g.csr
    _, sigma = kernels.all_pairs_counts(indptr, indices)
    nxg = to_networkx(g)
    for i, v in enumerate(g.vertices):
        for j, w in enumerate(g.vertices):
            if i == j:
                assert sigma[i, j] == 1
            elif nx.has_path(nxg, v, w):
                assert sigma[i, j] == sum(1 for _ in nx.all_shortest_paths(nxg, v, w))


def test_disconnected_markers(backend):
    from gpbc.graphs import Graph

    g = Graph.from_edges(range(4), [(0, 1), (2, 3)])
    indptr, indices = g.csr
    dist, sigma = kernels.sssp_counts(indptr, indices, 0)
    assert dist.tolist() == [0, 1, -1, -1]
    assert sigma.tolist() == [1, 1, 0, 0]


def test_overflow_raises_in_both_backends():
    g = diamond_chain(80)
    indptr, indices = g.csr
    for name in ("numba", "numpy"):
        with kernels.use_backend(name):
            with pytest.raises(OverflowError):
                kernels.all_pairs_counts(indptr, indices)
            with pytest.raises(OverflowError):
                kernels.brandes_scaled(indptr, indices)


def test_overflow_falls_back_to_bigints(backend):
    g = diamond_chain(80)
    data = bfs_dag(g, "s0")
    assert data.sigma["s80"] == 2**80
    assert data.dist["s80"] == 160


def test_env_var_selects_backend(monkeypatch):
    monkeypatch.setenv("GPBC_BACKEND", "numpy")
    monkeypatch.setattr(kernels, "_backend_name", None)
    monkeypatch.setattr(kernels, "_impl", None)
    assert kernels.active_backend() == "numpy"
    monkeypatch.setenv("GPBC_BACKEND", "nonsense")
    monkeypatch.setattr(kernels, "_backend_name", None)
    with pytest.raises(ValueError):
        kernels.active_backend()
