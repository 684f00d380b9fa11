import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpbc.errors import BadVertexLabel, InvalidParameters
from gpbc.graphs import (
    Graph,
    Ring,
    VertexId,
    build_gp,
    complete_graph,
    cycle_graph,
    export_graph,
    inner_cycle_decomposition,
    is_vertex_transitive,
    parse_vertex_label,
    path_graph,
    star_graph,
    wheel_graph,
)


def legal_pairs(n_max):
    for n in range(3, n_max + 1):
        for k in range(1, (n - 1) // 2 + 1):
            if 2 * k < n:
                yield n, k


def test_petersen_shape():
    g = build_gp(5, 2)
    assert len(g) == 10
    assert g.edge_count == 15
    assert {g.degree(v) for v in g.vertices} == {3}


def test_smallest_prism():
    g = build_gp(3, 1)
    assert len(g) == 6
    assert g.edge_count == 9


def test_inner_edge_rule():
    g = build_gp(12, 5)
    nbrs = set(g.adjacency[g.inner(0)])
    assert g.inner(5) in nbrs and g.inner(7) in nbrs


@pytest.mark.parametrize("n,k", [(2, 1), (5, 0), (5, -1), (4, 2), (6, 3), (10, 5)])
def test_invalid_parameters(n, k):
    with pytest.raises(InvalidParameters):
        build_gp(n, k)


def test_construction_deterministic():
    a, b = build_gp(9, 3), build_gp(9, 3)
    assert a.vertices == b.vertices
    assert a.adjacency == b.adjacency


def test_edge_set_matches_rules():
    for n, k in [(5, 2), (8, 3), (12, 5), (7, 1)]:
        g = build_gp(n, k)
        expected = set()
        for i in range(n):
            expected.add(frozenset({g.outer(i), g.outer(i + 1)}))
            expected.add(frozenset({g.outer(i), g.inner(i)}))
            expected.add(frozenset({g.inner(i), g.inner(i + k)}))
        assert {frozenset(e) for e in g.edges()} == expected
        assert g.edge_count == 3 * n


def test_adjacency_symmetry_and_degree_exhaustive():
    for n, k in legal_pairs(40):
        g = build_gp(n, k)
        assert g.edge_count == 3 * n
        for v in g.vertices:
            assert g.degree(v) == 3
            for w in g.adjacency[v]:
                assert v in g.adjacency[w]


def test_rotation_is_automorphism_up_to_100():
    for n, k in legal_pairs(100):
        g = build_gp(n, k)
        edges = {frozenset(e) for e in g.edges()}
        rotated = {
            frozenset({VertexId(a.ring, (a.index + 1) % n), VertexId(b.ring, (b.index + 1) % n)})
            for a, b in g.edges()
        }
        assert rotated == edges, (n, k)


def test_cycle_decomposition_examples():
    even = inner_cycle_decomposition(build_gp(10, 2))
    assert [len(c) for c in even.cycles] == [5, 5]
    assert {v.index % 2 for v in even.cycles[0]} == {0}
    assert {v.index % 2 for v in even.cycles[1]} == {1}

    odd = inner_cycle_decomposition(build_gp(11, 2))
    assert [len(c) for c in odd.cycles] == [11]

    third = inner_cycle_decomposition(build_gp(12, 3))
    assert [len(c) for c in third.cycles] == [4, 4, 4]


def test_cycle_decomposition_gcd_exhaustive():
    for n, k in legal_pairs(200):
        g = build_gp(n, k)
        decomp = inner_cycle_decomposition(g)
        d = math.gcd(n, k)
        assert len(decomp.cycles) == d
        assert all(len(c) == n // d for c in decomp.cycles)
        seen = [v for c in decomp.cycles for v in c]
        assert len(set(seen)) == n
        for cycle in decomp.cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                assert b in g.adjacency[a]


@pytest.mark.parametrize(
    "n,k,expected",
    [(10, 2, True), (5, 2, True), (12, 2, False), (7, 2, False), (8, 3, True), (13, 5, True)],
)
def test_vertex_transitive(n, k, expected):
    assert is_vertex_transitive(n, k) is expected


@given(st.integers(min_value=3, max_value=300), st.integers(min_value=1, max_value=149))
@settings(max_examples=200)
def test_vertex_transitive_definition(n, k):
    if 2 * k >= n:
        with pytest.raises(InvalidParameters):
            is_vertex_transitive(n, k)
        return
    expected = (k * k) % n in {1 % n, (n - 1) % n} or (n, k) == (10, 2)
    assert is_vertex_transitive(n, k) is expected


def test_export_csv():
    text = export_graph(build_gp(5, 2), "csv")
    lines = text.strip().split("\n")
    assert lines[0] == "source,target"
    assert len(lines) == 16
    assert lines[1:] == sorted(lines[1:])


def test_export_dot():
    text = export_graph(build_gp(5, 2), "dot")
    assert text.startswith("graph gp {\n")
    assert "  u0 -- v0;\n" in text
    assert text.rstrip().endswith("}")
    assert text.count(";") == 15


def test_export_json_schema():
    payload = json.loads(export_graph(build_gp(6, 2), "json"))
    assert payload["n"] == 6 and payload["k"] == 2
    assert len(payload["edges"]) == 18
    assert payload["vertices"][0] == "u0" and payload["vertices"][-1] == "v5"
    assert payload["edges"] == sorted(payload["edges"])
    assert all(a < b for a, b in payload["edges"])


def test_export_byte_stable():
    for fmt in ("dot", "json", "csv"):
        assert export_graph(build_gp(9, 2), fmt) == export_graph(build_gp(9, 2), fmt)


def test_parse_vertex_label():
    assert parse_vertex_label("u3", 10) == VertexId(Ring.OUTER, 3)
    assert parse_vertex_label("v-1", 10) == VertexId(Ring.INNER, 9)
    assert parse_vertex_label("u12", 10) == VertexId(Ring.OUTER, 2)
    for bad in ("w3", "u", "3", "uv3", ""):
        with pytest.raises(BadVertexLabel):
            parse_vertex_label(bad, 10)


def test_vertex_order():
    assert VertexId(Ring.OUTER, 5) < VertexId(Ring.INNER, 0)
    assert VertexId(Ring.OUTER, 1) < VertexId(Ring.OUTER, 2)
    assert VertexId(Ring.OUTER, 3).label == "u3"
    assert VertexId(Ring.INNER, 3).label == "v3"


def test_classic_builders():
    assert path_graph(6).edge_count == 5
    assert cycle_graph(7).edge_count == 7
    star = star_graph(6)
    assert star.degree(0) == 5 and star.degree(3) == 1
    wheel = wheel_graph(8)
    assert wheel.degree(0) == 7 and wheel.degree(1) == 3
    assert complete_graph(5).edge_count == 10


def test_graph_rejects_malformed():
    with pytest.raises(InvalidParameters):
        Graph.from_edges([0, 1], [(0, 0)])
    with pytest.raises(InvalidParameters):
        Graph([0, 1], {0: (1, 1), 1: (0, 0)})
    with pytest.raises(InvalidParameters):
        Graph([0, 1], {0: (1,), 1: ()})


def test_induced_subgraph():
    g = build_gp(6, 2)
    sub = g.induced_subgraph(g.outer_vertices())
    assert len(sub) == 6 and sub.edge_count == 6
    with pytest.raises(InvalidParameters):
        g.induced_subgraph([VertexId(Ring.OUTER, 0), "nope"])
