"""Pure-numpy kernels: level-synchronous BFS with identical semantics to
the numba backend, including the int64 overflow checks.

The all-pairs kernel runs every source at once.  Neighbor lists are
padded into a rectangular matrix (phantom vertex ``V`` marks padding), so
one BFS level is a single gather + reduce over ``[V, max_degree, V]``.
"""

from __future__ import annotations

import math

import numpy as np

INT64_MAX = np.iinfo(np.int64).max


def _edge_arrays(indptr: np.ndarray, indices: np.ndarray):
    v_count = indptr.shape[0] - 1
    src = np.repeat(np.arange(v_count, dtype=np.int64), np.diff(indptr))
    return src, indices


def _neighbor_matrix(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """CSR rows padded to a [V, max_degree] matrix; pad index is V."""
    v_count = indptr.shape[0] - 1
    degrees = np.diff(indptr)
    width = int(degrees.max()) if v_count else 0
    padded = np.full((v_count, max(width, 1)), v_count, dtype=np.int64)
    slot = np.arange(max(width, 1)) < degrees[:, None]
    padded[slot] = indices
    return padded


def sssp_counts(indptr, indices, source):
    v_count = indptr.shape[0] - 1
    e_src, e_dst = _edge_arrays(indptr, indices)
    max_deg = max(int(np.diff(indptr).max()) if v_count else 0, 1)
    dist = np.full(v_count, -1, np.int64)
    sigma = np.zeros(v_count, np.int64)
    dist[source] = 0
    sigma[source] = 1
    frontier = np.zeros(v_count, bool)
    frontier[source] = True
    level = 0
    while frontier.any():
        if int(sigma[frontier].max()) > INT64_MAX // max_deg:
            raise OverflowError("geodesic count exceeds int64")
        on_frontier = frontier[e_src]
        targets = e_dst[on_frontier]
        sources = e_src[on_frontier]
        undiscovered = dist[targets] == -1
        dist[targets[undiscovered]] = level + 1
        advancing = dist[targets] == level + 1
        np.add.at(sigma, targets[advancing], sigma[sources[advancing]])
        frontier = np.zeros(v_count, bool)
        frontier[targets[advancing]] = True
        level += 1
    return dist, sigma


def all_pairs_counts(indptr, indices):
    v_count = indptr.shape[0] - 1
    nbrs = _neighbor_matrix(indptr, indices)
    max_deg = max(nbrs.shape[1], 1)
    diagonal = np.arange(v_count)
    # one phantom row (index v_count) absorbs the padding slots
    dist = np.full((v_count + 1, v_count), -1, np.int64)
    sigma = np.zeros((v_count + 1, v_count), np.int64)
    frontier = np.zeros((v_count + 1, v_count), bool)
    dist[diagonal, diagonal] = 0
    sigma[diagonal, diagonal] = 1
    frontier[diagonal, diagonal] = True
    level = 0
    while frontier.any():
        if int(sigma[frontier].max()) > INT64_MAX // max_deg:
            raise OverflowError("geodesic count exceeds int64")
        in_frontier = frontier[nbrs]  # [vertex, slot, source]
        reached = in_frontier.any(axis=1)
        contrib = (sigma[nbrs] * in_frontier).sum(axis=1)
        newly = reached & (dist[:v_count] == -1)
        dist[:v_count][newly] = level + 1
        sigma[:v_count][newly] = contrib[newly]
        frontier = np.zeros((v_count + 1, v_count), bool)
        frontier[:v_count][newly] = True
        level += 1
    return dist[:v_count].T.copy(), sigma[:v_count].T.copy()


def brandes_scaled(indptr, indices):
    v_count = indptr.shape[0] - 1
    e_src, e_dst = _edge_arrays(indptr, indices)
    dep = np.zeros((v_count, v_count), np.int64)
    dens = np.ones(v_count, np.int64)
    for s in range(v_count):
        dist, sigma = sssp_counts(indptr, indices, s)
        lcm = math.lcm(*(int(x) for x in sigma[dist >= 0]))
        if lcm > INT64_MAX:
            raise OverflowError("geodesic-count lcm exceeds int64")
        row = dep[s]
        src_dist = dist[e_src]
        dst_dist = dist[e_dst]
        for level in range(int(dist.max()), 0, -1):
            picked = (src_dist == level - 1) & (dst_dist == level)
            if not picked.any():
                continue
            preds = e_src[picked]
            tops = e_dst[picked]
            if int(row.max(initial=0)) > INT64_MAX - lcm:
                raise OverflowError("scaled dependency exceeds int64")
            acc = lcm + row[tops]
            if (acc % sigma[tops] != 0).any():
                # unreachable by construction: lcm divides every sigma
                raise ValueError("scaled dependency division is not exact")
            coef = acc // sigma[tops]
            if int(sigma[preds].max()) > INT64_MAX // max(int(coef.max()), 1):
                raise OverflowError("scaled dependency exceeds int64")
            terms = sigma[preds] * coef
            headroom = int(row.max(initial=0)) + int(terms.max()) * int(picked.sum())
            if headroom > INT64_MAX:
                raise OverflowError("scaled dependency exceeds int64")
            np.add.at(row, preds, terms)
        row[s] = 0
        dens[s] = lcm
    return dep, dens
