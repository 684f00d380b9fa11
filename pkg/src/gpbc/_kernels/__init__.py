"""Kernel backend selection.

Two interchangeable implementations of the hot loops exist:

* ``numba`` -- ``@njit``-compiled per-source BFS and dependency
  accumulation (default when numba imports cleanly),
* ``numpy`` -- vectorized level-synchronous fallback with identical
  semantics, including int64 overflow checks.

Set ``GPBC_BACKEND=numpy`` (or ``numba``) to force one.  All kernels
count geodesics in checked int64 and raise ``OverflowError`` when a
count would not fit; callers fall back to exact big-integer paths.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

_ENV_VAR = "GPBC_BACKEND"
_VALID = ("numba", "numpy")

_backend_name: str | None = None
_impl = None


def _default_backend() -> str:
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


def _load(name: str):
    if name == "numba":
        from . import _numba_impl as mod
    else:
        from . import _numpy_impl as mod
    return mod


def active_backend() -> str:
    """Name of the backend that will run the next kernel call."""
    global _backend_name, _impl
    if _backend_name is None:
        requested = os.environ.get(_ENV_VAR, "").strip().lower()
        if requested and requested not in _VALID:
            raise ValueError(
                f"{_ENV_VAR} must be one of {_VALID}, got {requested!r}"
            )
        _backend_name = requested or _default_backend()
        _impl = _load(_backend_name)
    return _backend_name


def set_backend(name: str) -> None:
    global _backend_name, _impl
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    _backend_name = name
    _impl = _load(name)


@contextmanager
def use_backend(name: str):
    """Temporarily force a backend (used by tests and benchmarks)."""
    previous = active_backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _mod():
    active_backend()
    return _impl


def sssp_counts(indptr, indices, source: int):
    """Single-source BFS distances and geodesic counts (checked int64)."""
    return _mod().sssp_counts(indptr, indices, source)


def all_pairs_counts(indptr, indices):
    """All-pairs distances and geodesic counts; row = source vertex."""
    return _mod().all_pairs_counts(indptr, indices)


def brandes_scaled(indptr, indices):
    """Per-source dependency accumulation in scaled integers.

    Returns ``(dep, dens)`` where ``dep[s, v] / dens[s]`` is the exact
    dependency of source ``s`` on vertex ``v``; ``dens[s]`` is the lcm of
    the geodesic counts from ``s``, so every division in the recurrence
    is exact.  Raises OverflowError when int64 cannot hold a value.
    """
    return _mod().brandes_scaled(indptr, indices)
