"""Exact betweenness centrality and its induced variants.

Every value is an exact :class:`fractions.Fraction`; no floating point
enters any computation.  Pairs are unordered throughout, so the vertex
betweenness of x is the sum of pair dependencies sigma_st(x)/sigma_st
over unordered pairs {s, t} avoiding x.  The main implementation is a
Brandes-style accumulation run in scaled integers on the kernel backend;
``naive_betweenness`` is the independent triple-loop checker.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable

import numpy as np

from . import _kernels as kernels
from .errors import (
    InvalidParameters,
    MembershipError,
    OverlapError,
    SameVertexError,
)
from .graphs import Graph, GpGraph
from .shortest_paths import _python_sssp, apsp_matrices

Rational = Fraction

INT64_MAX = np.iinfo(np.int64).max


@dataclass
class CentralityMap:
    """Betweenness values in canonical vertex order, exact rationals."""

    values: dict
    graph_n: int | None = None
    graph_k: int | None = None

    def __getitem__(self, vertex) -> Fraction:
        return self.values[vertex]

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def to_csv(self) -> str:
        lines = ["vertex,num,den,decimal"]
        for v, value in self.values.items():
            label = v.label if hasattr(v, "label") else str(v)
            lines.append(
                f"{label},{value.numerator},{value.denominator},{float(value)!r}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {}
        for v, value in self.values.items():
            label = v.label if hasattr(v, "label") else str(v)
            payload[label] = {"num": value.numerator, "den": value.denominator}
        return json.dumps(payload) + "\n"


def _brandes_fractions(g: Graph) -> dict:
    """Reference Brandes accumulation with Fraction arithmetic throughout."""
    totals = {v: Fraction(0) for v in g.vertices}
    for s in g.vertices:
        dist = {s: 0}
        counts = {s: 1}
        preds: dict = {s: []}
        order = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    counts[w] = 0
                    preds[w] = []
                    order.append(w)
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    counts[w] += counts[v]
                    preds[w].append(v)
        delta = {v: Fraction(0) for v in order}
        for w in reversed(order):
            coef = (1 + delta[w]) / counts[w]
            for p in preds[w]:
                delta[p] += counts[p] * coef
            if w != s:
                totals[w] += delta[w]
    return {v: val / 2 for v, val in totals.items()}


def betweenness(g: Graph) -> CentralityMap:
    """Exact betweenness of every vertex (unordered pairs, unnormalized)."""
    indptr, indices = g.csr
    try:
        dep, dens = kernels.brandes_scaled(indptr, indices)
        values = _assemble_scaled(g, dep, dens)
    except OverflowError:
        values = _brandes_fractions(g)
    n = getattr(g, "n", None)
    k = getattr(g, "k", None)
    return CentralityMap(values=values, graph_n=n, graph_k=k)


def _assemble_scaled(g: Graph, dep: np.ndarray, dens: np.ndarray) -> dict:
    v_count = len(g)
    by_den: dict[int, np.ndarray] = {}
    for s_idx in range(v_count):
        den = int(dens[s_idx])
        row = dep[s_idx]
        current = by_den.get(den)
        if current is None:
            by_den[den] = row.copy()
        else:
            if int(current.max(initial=0)) + int(row.max(initial=0)) > INT64_MAX:
                raise OverflowError("dependency total exceeds int64")
            current += row
    values = {v: Fraction(0) for v in g.vertices}
    for den, row in by_den.items():
        for v, num in zip(g.vertices, row.tolist()):
            if num:
                values[v] += Fraction(num, den)
    return {v: val / 2 for v, val in values.items()}


def naive_betweenness(g: Graph) -> CentralityMap:
    """Triple loop over pairs and interior vertices; the slow cross-check.

    Uses only per-source BFS maps and the sigma_through product rule, so it
    shares no accumulation logic with :func:`betweenness`.
    """
    data = {v: _python_sssp(g, v) for v in g.vertices}
    totals = {x: Fraction(0) for x in g.vertices}
    verts = list(g.vertices)
    for i, s in enumerate(verts):
        dist_s, sigma_s = data[s]
        for t in verts[i + 1 :]:
            if t not in dist_s:
                continue
            den = sigma_s[t]
            target_d = dist_s[t]
            for x in verts:
                if x == s or x == t or x not in dist_s:
                    continue
                dist_x, sigma_x = data[x]
                if t in dist_x and dist_s[x] + dist_x[t] == target_d:
                    totals[x] += Fraction(sigma_s[x] * sigma_x[t], den)
    n = getattr(g, "n", None)
    k = getattr(g, "k", None)
    return CentralityMap(values=totals, graph_n=n, graph_k=k)


# --- induced variants -------------------------------------------------------


def _fraction_sum(nums: np.ndarray, dens: np.ndarray) -> Fraction:
    """Exact sum of nums[i]/dens[i] with int64 inputs and positive dens."""
    if nums.size == 0:
        return Fraction(0)
    max_den = int(dens.max())
    max_num = int(nums.max(initial=0))
    if max_den <= 1_000_000 and max_num * int(nums.size) <= INT64_MAX:
        acc = np.zeros(max_den + 1, np.int64)
        np.add.at(acc, dens, nums)
        total = Fraction(0)
        for den in np.nonzero(acc)[0].tolist():
            total += Fraction(int(acc[den]), den)
        return total
    total = Fraction(0)
    for num, den in zip(nums.tolist(), dens.tolist()):
        total += Fraction(num, den)
    return total


def _dependency_over_pairs(g: Graph, x, firsts: np.ndarray, seconds: np.ndarray) -> Fraction:
    """Sum of pair dependencies of the ordered index pairs on x."""
    if firsts.size == 0:
        return Fraction(0)
    try:
        dist, sig = apsp_matrices(g)
    except OverflowError:
        return _dependency_over_pairs_python(g, x, firsts, seconds)
    ix = g.index_of(x)
    d_ax = dist[firsts, ix]
    d_xb = dist[ix, seconds]
    d_ab = dist[firsts, seconds]
    on_geodesic = (d_ax >= 0) & (d_xb >= 0) & (d_ab >= 0) & (d_ax + d_xb == d_ab)
    if not on_geodesic.any():
        return Fraction(0)
    s_ax = sig[firsts[on_geodesic], ix]
    s_xb = sig[ix, seconds[on_geodesic]]
    if int(s_ax.max()) > 0 and int(s_xb.max()) > INT64_MAX // int(s_ax.max()):
        return _dependency_over_pairs_python(g, x, firsts, seconds)
    nums = s_ax * s_xb
    dens = sig[firsts[on_geodesic], seconds[on_geodesic]]
    return _fraction_sum(nums, dens)


def _dependency_over_pairs_python(g: Graph, x, firsts, seconds) -> Fraction:
    """Big-integer fallback for graphs whose counts overflow int64."""
    dist_x, sigma_x = _python_sssp(g, x)
    cache: dict = {}
    total = Fraction(0)
    for ia, ib in zip(firsts.tolist(), seconds.tolist()):
        a = g.vertices[ia]
        b = g.vertices[ib]
        if a not in cache:
            cache[a] = _python_sssp(g, a)
        dist_a, sigma_a = cache[a]
        if b not in dist_a or x not in dist_a or b not in dist_x:
            continue
        if dist_a[x] + dist_x[b] == dist_a[b]:
            total += Fraction(sigma_a[x] * sigma_x[b], sigma_a[b])
    return total


def _member_indices(g: Graph, vertices: Iterable, exclude) -> np.ndarray:
    out = []
    for v in vertices:
        if v not in g:
            raise InvalidParameters(f"vertex {v!r} not in graph")
        if v != exclude:
            out.append(g.index_of(v))
    return np.array(sorted(set(out)), dtype=np.int64)


def induced_by_set(g: Graph, x, vertex_set: Iterable) -> Fraction:
    """Dependency of all unordered pairs inside ``vertex_set`` (minus x) on x."""
    members = _member_indices(g, vertex_set, x)
    if members.size < 2:
        return Fraction(0)
    left, right = np.triu_indices(members.size, k=1)
    return _dependency_over_pairs(g, x, members[left], members[right])


def induced_by_vertex(g: Graph, x, x0) -> Fraction:
    """Dependency of the single source x0 on x, summed over all targets."""
    if x == x0:
        raise SameVertexError("x and x0 must differ")
    if x not in g or x0 not in g:
        raise InvalidParameters("x and x0 must be graph vertices")
    i0 = g.index_of(x0)
    ix = g.index_of(x)
    try:
        dist, sig = apsp_matrices(g)
    except OverflowError:
        dist = sig = None
    if dist is None or int(dist[i0, ix]) < 0:
        targets = np.array(
            [i for i in range(len(g)) if i != i0 and i != ix], dtype=np.int64
        )
        firsts = np.full(targets.size, i0, dtype=np.int64)
        return _dependency_over_pairs_python(g, x, firsts, targets)
    from_source = dist[i0]
    from_x = dist[ix]
    on_geodesic = (
        (from_source >= 0)
        & (from_x >= 0)
        & (from_source == int(dist[i0, ix]) + from_x)
    )
    on_geodesic[ix] = False
    on_geodesic[i0] = False
    if not on_geodesic.any():
        return Fraction(0)
    source_to_x = int(sig[i0, ix])
    x_to_target = sig[ix][on_geodesic]
    if source_to_x > INT64_MAX // max(int(x_to_target.max()), 1):
        targets = np.nonzero(on_geodesic)[0].astype(np.int64)
        firsts = np.full(targets.size, i0, dtype=np.int64)
        return _dependency_over_pairs_python(g, x, firsts, targets)
    return _fraction_sum(source_to_x * x_to_target, sig[i0][on_geodesic])


def induced_between_sets(g: Graph, x, set_a: Iterable, set_b: Iterable) -> Fraction:
    """Dependency of cross pairs (one endpoint per set) on x."""
    a_list = list(set_a)
    b_list = list(set_b)
    overlap = set(a_list) & set(b_list)
    if overlap:
        raise OverlapError(f"sets share {len(overlap)} vertices")
    a_idx = _member_indices(g, a_list, x)
    b_idx = _member_indices(g, b_list, x)
    if a_idx.size == 0 or b_idx.size == 0:
        return Fraction(0)
    firsts = np.repeat(a_idx, b_idx.size)
    seconds = np.tile(b_idx, a_idx.size)
    return _dependency_over_pairs(g, x, firsts, seconds)


def induced_sum(g: Graph, x, set_a: Iterable, set_b: Iterable) -> Fraction:
    """induced_by_set over each of two disjoint sets, added."""
    a_list = list(set_a)
    b_list = list(set_b)
    if set(a_list) & set(b_list):
        raise OverlapError("sets must be disjoint")
    return induced_by_set(g, x, a_list) + induced_by_set(g, x, b_list)


def subgraph_betweenness(g: Graph, subgraph_vertices: Iterable, x) -> Fraction:
    """Betweenness of x with all geodesics confined to the induced subgraph.

    Pairs disconnected inside the subgraph contribute 0.
    """
    keep = list(subgraph_vertices)
    if x not in keep:
        raise MembershipError(f"{x!r} is not in the subgraph vertex set")
    sub = g.induced_subgraph(keep)
    return betweenness(sub).values[x]
