"""Brute-force shortest-path machinery: the oracle side of the package.

All functions work on any connected :class:`~gpbc.graphs.Graph`.  Counting
runs on the selected kernel backend in checked int64; if a count would
overflow, the computation transparently redoes the affected source with
plain Python integers, so results are always exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from . import _kernels as kernels
from .errors import EndpointError, InvalidParameters, LimitExceeded
from .graphs import Graph


@dataclass
class ShortestPathData:
    """Per-source BFS result: distances, geodesic counts, DAG predecessors.

    ``sigma[t]`` equals the sum of ``sigma[p]`` over ``preds[t]``, and every
    predecessor sits exactly one level closer to the source.
    """

    source: Hashable
    dist: dict
    sigma: dict
    preds: dict


def _python_sssp(g: Graph, source) -> tuple[dict, dict]:
    """Dict-based BFS with arbitrary-precision counts (overflow fallback)."""
    dist = {source: 0}
    sigma = {source: 1}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g.adjacency[v]:
            if w not in dist:
                dist[w] = dv + 1
                sigma[w] = 0
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sigma[v]
    return dist, sigma


def _sssp_maps(g: Graph, source) -> tuple[dict, dict]:
    """(dist, sigma) dictionaries for one source, exact."""
    indptr, indices = g.csr
    try:
        dist, sigma = kernels.sssp_counts(indptr, indices, g.index_of(source))
    except OverflowError:
        return _python_sssp(g, source)
    dist_map = {}
    sigma_map = {}
    for v, d, s in zip(g.vertices, dist.tolist(), sigma.tolist()):
        if d >= 0:
            dist_map[v] = d
            sigma_map[v] = s
    return dist_map, sigma_map


def bfs_dag(g: Graph, s) -> ShortestPathData:
    """Single-source distances, geodesic counts, and BFS-DAG predecessors."""
    if s not in g:
        raise InvalidParameters(f"vertex {s!r} not in graph")
    dist, sigma = _sssp_maps(g, s)
    preds = {
        v: [p for p in g.adjacency[v] if dist.get(p, -2) == dist[v] - 1]
        for v in dist
    }
    return ShortestPathData(source=s, dist=dist, sigma=sigma, preds=preds)


def apsp_matrices(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """All-pairs (dist, sigma) int64 matrices, cached per kernel backend.

    Raises OverflowError when some count does not fit in int64; callers
    needing exact values on such graphs use the per-source dict API.
    """
    backend = kernels.active_backend()
    cached = getattr(g, "_apsp_cache", None)
    if cached is not None and cached[0] == backend:
        return cached[1]
    indptr, indices = g.csr
    matrices = kernels.all_pairs_counts(indptr, indices)
    g._apsp_cache = (backend, matrices)
    return matrices


def distance(g: Graph, s, t) -> int:
    """Length of a shortest s-t path."""
    if s not in g or t not in g:
        raise InvalidParameters("both endpoints must be graph vertices")
    dist, _ = _sssp_maps(g, s)
    if t not in dist:
        raise InvalidParameters(f"no path between {s!r} and {t!r}")
    return dist[t]


def sigma(g: Graph, s, t) -> int:
    """Number of distinct geodesics between s and t; sigma(s, s) == 1."""
    if s not in g or t not in g:
        raise InvalidParameters("both endpoints must be graph vertices")
    dist, counts = _sssp_maps(g, s)
    if t not in dist:
        raise InvalidParameters(f"no path between {s!r} and {t!r}")
    return counts[t]


def sigma_through(g: Graph, s, t, x) -> int:
    """Geodesics between s and t having x as an internal vertex.

    Equals sigma(s,x) * sigma(x,t) when x sits on some s-t geodesic, else 0.
    Endpoints are rejected loudly: the sums this feeds never include them.
    """
    if x == s or x == t:
        raise EndpointError("x must differ from both endpoints")
    dist_s, sigma_s = _sssp_maps(g, s)
    dist_x, sigma_x = _sssp_maps(g, x)
    if t not in dist_s or x not in dist_s or t not in dist_x:
        return 0
    if dist_s[x] + dist_x[t] != dist_s[t]:
        return 0
    return sigma_s[x] * sigma_x[t]


def diameter(g: Graph) -> int:
    """Maximum pairwise distance; requires a connected graph."""
    try:
        dist, _ = apsp_matrices(g)
        if (dist < 0).any():
            raise InvalidParameters("graph is disconnected")
        return int(dist.max())
    except OverflowError:
        best = 0
        for v in g.vertices:
            dist_map, _ = _python_sssp(g, v)
            if len(dist_map) != len(g):
                raise InvalidParameters("graph is disconnected") from None
            best = max(best, max(dist_map.values()))
        return best


def enumerate_geodesics(g: Graph, s, t, limit: int = 10_000) -> list[list]:
    """All geodesics as explicit vertex sequences, lexicographically sorted.

    Lexicographic order compares canonical vertex positions.  Raises
    LimitExceeded (before enumerating) when more than ``limit`` exist.
    """
    if limit < 1:
        raise InvalidParameters("limit must be positive")
    data = bfs_dag(g, s)
    if t not in data.dist:
        raise InvalidParameters(f"no path between {s!r} and {t!r}")
    if data.sigma[t] > limit:
        raise LimitExceeded(
            f"{data.sigma[t]} geodesics exceed the limit of {limit}"
        )
    paths = []
    stack = [(t, [t])]
    while stack:
        v, suffix = stack.pop()
        if v == s:
            paths.append(suffix[::-1])
            continue
        for p in data.preds[v]:
            stack.append((p, suffix + [p]))
    paths.sort(key=lambda path: tuple(g.index_of(v) for v in path))
    return paths
