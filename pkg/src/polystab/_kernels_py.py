"""NumPy implementations of the direction-batched kernels.

Every kernel works on a batch of ``m`` directions and a configuration packed
as ``rel`` (all vertices minus their own centroid, stacked), ``starts``
(polygon ``i`` owns rows ``starts[i]:starts[i+1]``) and ``centroids``.
Projection arrays have shape ``(m, n)``: ``center`` is n.S_i, ``up`` is
w_i(n) and ``down`` is w_i(-n).
"""
import numpy as np


def project(rel, starts, centroids, cos_t, sin_t):
    cos_t = np.ascontiguousarray(cos_t, dtype=np.float64)
    sin_t = np.ascontiguousarray(sin_t, dtype=np.float64)
    center = np.outer(cos_t, centroids[:, 0]) + np.outer(sin_t, centroids[:, 1])
    dots = np.outer(cos_t, rel[:, 0]) + np.outer(sin_t, rel[:, 1])
    idx = np.asarray(starts[:-1], dtype=np.intp)
    up = np.maximum.reduceat(dots, idx, axis=1)
    down = -np.minimum.reduceat(dots, idx, axis=1)
    return center, up, down


def pairwise_cstar(center, up, down):
    """max(0, max over i != j of (C_j - C_i) / (up_i + down_j)) per direction."""
    m, n = center.shape
    out = np.zeros(m)
    for i in range(n):
        num = center - center[:, i : i + 1]
        den = up[:, i : i + 1] + down
        ratio = num / den
        ratio[:, i] = 0.0
        np.maximum(out, ratio.max(axis=1), out=out)
    return out


def feasible_bounds(center, up, down, c):
    c = np.asarray(c, dtype=np.float64)
    if c.ndim == 0:
        c = np.full(center.shape[0], float(c))
    lo = (center - c[:, None] * down).max(axis=1)
    hi = (center + c[:, None] * up).min(axis=1)
    return lo, hi


def bisect_cmin(center, up, down, c_tol):
    """Smallest c (to absolute ``c_tol``) with a common point of all intervals.

    Pure interval-intersection search; deliberately never forms the pairwise
    ratios used by :func:`pairwise_cstar`.
    """
    m = center.shape[0]

    def feasible(c, rows):
        cc = c[:, None]
        lo = (center[rows] - cc * down[rows]).max(axis=1)
        hi = (center[rows] + cc * up[rows]).min(axis=1)
        return lo <= hi

    all_rows = np.arange(m)
    lo = np.zeros(m)
    hi = np.ones(m)
    done = feasible(np.zeros(m), all_rows)
    hi[done] = 0.0

    rows = all_rows[~done]
    while rows.size:
        ok = feasible(hi[rows], rows)
        lo[rows[~ok]] = hi[rows[~ok]]
        hi[rows[~ok]] *= 2.0
        rows = rows[~ok]

    rows = all_rows[(hi - lo) > c_tol]
    while rows.size:
        mid = 0.5 * (lo[rows] + hi[rows])
        ok = feasible(mid, rows)
        hi[rows[ok]] = mid[ok]
        lo[rows[~ok]] = mid[~ok]
        rows = rows[(hi[rows] - lo[rows]) > c_tol]
    return hi
