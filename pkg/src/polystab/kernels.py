"""Backend selection for the direction-batched kernels.

The compiled extension is used when it imports; otherwise the NumPy module
takes over.  :func:`use_backend` switches explicitly (tests and benchmarks
use it to compare the two).
"""
from __future__ import annotations

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = {"python": _kernels_py}
if _kernels_c is not None:
    BACKENDS["compiled"] = _kernels_c

_active = _kernels_c if _kernels_c is not None else _kernels_py


def backend() -> str:
    return "compiled" if _active is _kernels_c and _kernels_c is not None else "python"


def use_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    _active = BACKENDS[name]


def project(rel, starts, centroids, cos_t, sin_t):
    return _active.project(rel, starts, centroids, cos_t, sin_t)


def pairwise_cstar(center, up, down):
    return _active.pairwise_cstar(center, up, down)


def feasible_bounds(center, up, down, c):
    return _active.feasible_bounds(center, up, down, c)


def bisect_cmin(center, up, down, c_tol):
    return _active.bisect_cmin(center, up, down, float(c_tol))


class Packed:
    """Configuration flattened into the arrays the kernels consume."""

    __slots__ = ("rel", "starts", "centroids", "n")

    def __init__(self, config):
        polys = config.polygons
        self.rel = np.ascontiguousarray(np.vstack([p.relative_vertices for p in polys]))
        self.starts = np.cumsum([0] + [len(p) for p in polys]).astype(np.intp)
        self.centroids = np.ascontiguousarray(config.centroids)
        self.n = len(polys)

    def project(self, thetas):
        thetas = np.atleast_1d(np.asarray(thetas, dtype=np.float64))
        return project(self.rel, self.starts, self.centroids, np.cos(thetas), np.sin(thetas))
