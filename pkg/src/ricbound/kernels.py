"""Kernel backend selection.

The compiled extension is used when it imports and ``RICBOUND_PURE_PYTHON``
is unset (or "0").  Compiled kernels work on int64 and raise OverflowError
on overflow; the wrappers below then rerun the pure-Python kernel, so results
never depend on the backend.
"""

from __future__ import annotations

import os

from . import _pykernels

_ckernels = None
if os.environ.get("RICBOUND_PURE_PYTHON", "0") in ("", "0"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def available_backends() -> list[str]:
    out = ["python"]
    if _ckernels is not None:
        out.insert(0, "cython")
    return out


def _module(backend: str | None):
    if backend is None:
        backend = BACKEND
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")


def bfs_counts(n, indptr, indices, backend=None):
    mod = _module(backend)
    try:
        return mod.bfs_counts(n, indptr, indices)
    except OverflowError:
        return _pykernels.bfs_counts(n, indptr, indices)


def simplex_bland(tab, m, k, backend=None):
    # the compiled kernel works on a copy and only writes back on success
    mod = _module(backend)
    try:
        return mod.simplex_bland(tab, m, k)
    except OverflowError:
        return _pykernels.simplex_bland(tab, m, k)


def oracle_min(lo, hi, weights, dist, backend=None):
    return _module(backend).oracle_min(lo, hi, weights, dist)
