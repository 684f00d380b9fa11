"""Construction of generalized Petersen graphs and small classic families.

A generalized Petersen graph ``GP(n, k)`` has outer vertices ``u0..u{n-1}``
forming an n-cycle, spokes ``ui -- vi``, and inner edges ``vi -- v{i+k}``
with all subscripts read modulo n.  The graph is trivalent with 2n vertices
and 3n edges; construction rejects ``2k >= n`` because every result in this
package assumes trivalence.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import BadVertexLabel, InvalidParameters


class Ring(IntEnum):
    """Which cycle a GP vertex belongs to; outer sorts before inner."""

    OUTER = 0
    INNER = 1


@dataclass(frozen=True, order=True)
class VertexId:
    """A GP vertex: ring tag plus index already reduced modulo n."""

    ring: Ring
    index: int

    @property
    def label(self) -> str:
        return ("u" if self.ring is Ring.OUTER else "v") + str(self.index)

    def __repr__(self) -> str:  # keep pytest output readable
        return self.label


def outer(i: int, n: int) -> VertexId:
    return VertexId(Ring.OUTER, i % n)


def inner(i: int, n: int) -> VertexId:
    return VertexId(Ring.INNER, i % n)


def parse_vertex_label(label: str, n: int) -> VertexId:
    """Parse ``u<i>`` / ``v<i>``; negative indices are normalized mod n."""
    text = label.strip()
    if len(text) < 2 or text[0] not in ("u", "v"):
        raise BadVertexLabel(f"cannot parse vertex label {label!r}")
    try:
        idx = int(text[1:])
    except ValueError as exc:
        raise BadVertexLabel(f"cannot parse vertex label {label!r}") from exc
    ring = Ring.OUTER if text[0] == "u" else Ring.INNER
    return VertexId(ring, idx % n)


class Graph:
    """Immutable undirected graph with a fixed canonical vertex order.

    Adjacency lists keep the order given by the builder, so serialized
    forms and kernel traversals are deterministic.  Instances are safe to
    share between threads after construction.
    """

    def __init__(self, vertices: Sequence[Hashable], adjacency: dict):
        self.vertices: tuple = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise InvalidParameters("duplicate vertices")
        adj = {}
        for v in self.vertices:
            neighbors = tuple(adjacency.get(v, ()))
            if v in neighbors:
                raise InvalidParameters(f"self-loop at {v!r}")
            if len(set(neighbors)) != len(neighbors):
                raise InvalidParameters(f"parallel edges at {v!r}")
            adj[v] = neighbors
        for v, neighbors in adj.items():
            for w in neighbors:
                if v not in adj[w]:
                    raise InvalidParameters(f"asymmetric adjacency {v!r}->{w!r}")
        self.adjacency: dict = adj

    @classmethod
    def from_edges(cls, vertices: Iterable[Hashable], edges: Iterable[tuple]) -> "Graph":
        """Build with neighbor lists sorted by canonical vertex position."""
        vertices = tuple(vertices)
        order = {v: i for i, v in enumerate(vertices)}
        neighbor_sets: dict = {v: set() for v in vertices}
        for a, b in edges:
            if a == b:
                raise InvalidParameters(f"self-loop at {a!r}")
            neighbor_sets[a].add(b)
            neighbor_sets[b].add(a)
        adjacency = {
            v: tuple(sorted(neighbor_sets[v], key=order.__getitem__)) for v in vertices
        }
        return cls(vertices, adjacency)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def index_of(self, v) -> int:
        return self._index[v]

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    def edges(self) -> list[tuple]:
        """Undirected edge list, each edge once, in canonical-index order."""
        out = []
        for v in self.vertices:
            iv = self._index[v]
            for w in self.adjacency[v]:
                if iv < self._index[w]:
                    out.append((v, w))
        return out

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR layout (indptr, indices) for the kernels."""
        indptr = np.zeros(len(self.vertices) + 1, dtype=np.int64)
        indices = np.empty(2 * self.edge_count, dtype=np.int64)
        pos = 0
        for i, v in enumerate(self.vertices):
            for w in self.adjacency[v]:
                indices[pos] = self._index[w]
                pos += 1
            indptr[i + 1] = pos
        return indptr, indices

    def induced_subgraph(self, keep: Iterable) -> "Graph":
        """Subgraph on ``keep``, vertices retaining canonical order."""
        keep_set = set(keep)
        missing = keep_set - set(self.vertices)
        if missing:
            raise InvalidParameters(f"unknown vertices: {sorted(map(str, missing))}")
        vertices = [v for v in self.vertices if v in keep_set]
        adjacency = {
            v: tuple(w for w in self.adjacency[v] if w in keep_set) for v in vertices
        }
        return Graph(vertices, adjacency)


class GpGraph(Graph):
    """``GP(n, k)``: immutable, trivalent, canonical vertex order u0..v{n-1}."""

    def __init__(self, n: int, k: int):
        check_gp_parameters(n, k)
        self.n = n
        self.k = k
        outer_ids = [VertexId(Ring.OUTER, i) for i in range(n)]
        inner_ids = [VertexId(Ring.INNER, i) for i in range(n)]
        adjacency = {}
        for i in range(n):
            adjacency[outer_ids[i]] = (
                outer_ids[(i + 1) % n],
                outer_ids[(i - 1) % n],
                inner_ids[i],
            )
            lo, hi = sorted(((i + k) % n, (i - k) % n))
            adjacency[inner_ids[i]] = (outer_ids[i], inner_ids[lo], inner_ids[hi])
        super().__init__(outer_ids + inner_ids, adjacency)

    def outer(self, i: int) -> VertexId:
        return VertexId(Ring.OUTER, i % self.n)

    def inner(self, i: int) -> VertexId:
        return VertexId(Ring.INNER, i % self.n)

    def outer_vertices(self) -> list[VertexId]:
        return [VertexId(Ring.OUTER, i) for i in range(self.n)]

    def inner_vertices(self) -> list[VertexId]:
        return [VertexId(Ring.INNER, i) for i in range(self.n)]

    def __repr__(self) -> str:
        return f"GpGraph(n={self.n}, k={self.k})"


def check_gp_parameters(n: int, k: int) -> None:
    """Raise InvalidParameters unless ``n >= 3`` and ``1 <= k < n/2``."""
    if n < 3:
        raise InvalidParameters(f"require n >= 3, got n={n}")
    if k <= 0 or 2 * k >= n:
        raise InvalidParameters(f"require 1 <= k and 2k < n, got n={n}, k={k}")


def build_gp(n: int, k: int) -> GpGraph:
    """Construct ``GP(n, k)``; 2n vertices, 3n edges, every degree 3."""
    return GpGraph(n, k)


@dataclass(frozen=True)
class CycleDecomposition:
    """The inner edges split into gcd(n,k) disjoint cycles of length n/gcd."""

    cycles: tuple[tuple[VertexId, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)


def inner_cycle_decomposition(g: GpGraph) -> CycleDecomposition:
    """Walk each inner cycle by repeatedly stepping ``i -> i + k`` mod n."""
    n, k = g.n, g.k
    d = math.gcd(n, k)
    cycles = []
    for start in range(d):
        cycle = []
        i = start
        while True:
            cycle.append(VertexId(Ring.INNER, i))
            i = (i + k) % n
            if i == start:
                break
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def is_vertex_transitive(n: int, k: int) -> bool:
    """True iff k^2 is congruent to +-1 mod n, or (n, k) == (10, 2)."""
    check_gp_parameters(n, k)
    return (k * k) % n in (1 % n, (-1) % n) or (n, k) == (10, 2)


class ExportFormat(Enum):
    DOT = "dot"
    JSON = "json"
    EDGE_LIST_CSV = "csv"


def _sorted_label_edges(g: GpGraph) -> list[tuple[str, str]]:
    pairs = []
    for a, b in g.edges():
        la, lb = a.label, b.label
        pairs.append((la, lb) if la < lb else (lb, la))
    return sorted(pairs)


def export_graph(g: GpGraph, fmt: ExportFormat | str) -> str:
    """Serialize deterministically; labels follow the u<i>/v<i> convention."""
    fmt = ExportFormat(fmt) if isinstance(fmt, str) else fmt
    edges = _sorted_label_edges(g)
    if fmt is ExportFormat.DOT:
        lines = ["graph gp {"]
        lines += [f"  {a} -- {b};" for a, b in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt is ExportFormat.EDGE_LIST_CSV:
        return "source,target\n" + "".join(f"{a},{b}\n" for a, b in edges)
    payload = {
        "n": g.n,
        "k": g.k,
        "vertices": [v.label for v in g.vertices],
        "edges": [[a, b] for a, b in edges],
    }
    return json.dumps(payload) + "\n"


# --- classic families (internal fixtures and oracle targets) ---------------


def path_graph(n: int) -> Graph:
    """Path on vertices 1..n (1-based to match the closed forms)."""
    if n < 1:
        raise InvalidParameters("path needs at least one vertex")
    return Graph.from_edges(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("cycle needs at least three vertices")
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star with hub 0 and n-1 leaves (n vertices total)."""
    if n < 2:
        raise InvalidParameters("star needs at least two vertices")
    return Graph.from_edges(range(n), [(0, i) for i in range(1, n)])


def wheel_graph(n: int) -> Graph:
    """Wheel with hub 0 and an (n-1)-cycle rim (n vertices total)."""
    if n < 4:
        raise InvalidParameters("wheel needs at least four vertices")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    spokes = [(0, i) for i in range(1, n)]
    return Graph.from_edges(range(n), rim + spokes)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters("complete graph needs at least one vertex")
    return Graph.from_edges(
        range(n), [(i, j) for i in range(n) for j in range(i + 1, n)]
    )
