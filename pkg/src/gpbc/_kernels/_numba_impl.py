"""numba-compiled kernels: per-source BFS counting and scaled Brandes."""

from __future__ import annotations

import numpy as np
from numba import njit

INT64_MAX = np.iinfo(np.int64).max


@njit(cache=True)
def _sssp_fill(indptr, indices, source, dist, sigma, order):
    """BFS from ``source`` writing into preallocated arrays.

    Returns the number of reached vertices; ``order`` holds them in BFS
    order.  ``dist`` is -1 and ``sigma`` is 0 for unreachable vertices.
    """
    dist[:] = -1
    sigma[:] = 0
    dist[source] = 0
    sigma[source] = 1
    order[0] = source
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        dv = dist[v]
        sv = sigma[v]
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if dist[w] == -1:
                dist[w] = dv + 1
                order[tail] = w
                tail += 1
            if dist[w] == dv + 1:
                if sigma[w] > INT64_MAX - sv:
                    raise OverflowError("geodesic count exceeds int64")
                sigma[w] += sv
    return tail


@njit(cache=True)
def sssp_counts(indptr, indices, source):
    v_count = indptr.shape[0] - 1
    dist = np.empty(v_count, np.int64)
    sigma = np.empty(v_count, np.int64)
    order = np.empty(v_count, np.int64)
    _sssp_fill(indptr, indices, source, dist, sigma, order)
    return dist, sigma


@njit(cache=True)
def all_pairs_counts(indptr, indices):
    v_count = indptr.shape[0] - 1
    dist = np.empty((v_count, v_count), np.int64)
    sigma = np.empty((v_count, v_count), np.int64)
    order = np.empty(v_count, np.int64)
    for s in range(v_count):
        _sssp_fill(indptr, indices, s, dist[s], sigma[s], order)
    return dist, sigma


@njit(cache=True)
def _gcd(a, b):
    while b != 0:
        a, b = b, a % b
    return a


@njit(cache=True)
def brandes_scaled(indptr, indices):
    v_count = indptr.shape[0] - 1
    dep = np.zeros((v_count, v_count), np.int64)
    dens = np.ones(v_count, np.int64)
    dist = np.empty(v_count, np.int64)
    sigma = np.empty(v_count, np.int64)
    order = np.empty(v_count, np.int64)
    for s in range(v_count):
        reached = _sssp_fill(indptr, indices, s, dist, sigma, order)
        lcm = np.int64(1)
        for idx in range(reached):
            sig = sigma[order[idx]]
            quot = sig // _gcd(lcm, sig)
            if quot != 0 and lcm > INT64_MAX // quot:
                raise OverflowError("geodesic-count lcm exceeds int64")
            lcm *= quot
        row = dep[s]
        for idx in range(reached - 1, 0, -1):
            w = order[idx]
            if row[w] > INT64_MAX - lcm:
                raise OverflowError("scaled dependency exceeds int64")
            acc = lcm + row[w]
            if acc % sigma[w] != 0:
                # unreachable by construction: lcm is divisible by every sigma
                raise ValueError("scaled dependency division is not exact")
            coef = acc // sigma[w]
            dw = dist[w]
            for e in range(indptr[w], indptr[w + 1]):
                p = indices[e]
                if dist[p] == dw - 1:
                    if sigma[p] > INT64_MAX // coef:
                        raise OverflowError("scaled dependency exceeds int64")
                    term = sigma[p] * coef
                    if row[p] > INT64_MAX - term:
                        raise OverflowError("scaled dependency exceeds int64")
                    row[p] += term
        row[s] = 0
        dens[s] = lcm
    return dep, dens
