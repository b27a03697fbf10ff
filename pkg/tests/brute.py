"""Reference computations written against definitions only.

Nothing here imports the package's kernels or solver.  Polygons are given
as plain ``(vertices, centroid)`` data.
"""
import math

import numpy as np


def raw(config):
    return [(np.asarray(p.vertices, dtype=float), np.asarray(p.centroid, dtype=float)) for p in config]


def scaled_intervals(polys, theta, c):
    """Projection intervals of every polygon scaled by c about its centroid."""
    n = np.array([math.cos(theta), math.sin(theta)])
    out = []
    for verts, s in polys:
        proj = (s + c * (verts - s)) @ n
        out.append((proj.min(), proj.max()))
    return out


def common_point(intervals):
    return max(lo for lo, _ in intervals) <= min(hi for _, hi in intervals)


def cmin_bisect(polys, theta, tol=1e-12):
    if common_point(scaled_intervals(polys, theta, 0.0)):
        return 0.0
    lo, hi = 0.0, 1.0
    while not common_point(scaled_intervals(polys, theta, hi)):
        lo, hi = hi, 2 * hi
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if common_point(scaled_intervals(polys, theta, mid)):
            hi = mid
        else:
            lo = mid
    return hi


def factors_at_offsets(polys, theta, offsets):
    """Correcting factor by definition: distance to the line over the strip half-width on its side."""
    n = np.array([math.cos(theta), math.sin(theta)])
    out = []
    for verts, s in polys:
        sc = s @ n
        proj = (verts - s) @ n
        d = sc - offsets
        out.append(np.where(d > 0, d / -proj.min(), -d / proj.max()))
    return np.array(out)


def dense_offset_scan(polys, theta, points=10_000):
    """min over offsets of max factor, by a 1e4-point scan plus one 1e4-point zoom."""
    n = np.array([math.cos(theta), math.sin(theta)])
    cs = [s @ n for _, s in polys]
    lo, hi = min(cs), max(cs)
    if hi - lo == 0:
        return 0.0
    b = np.linspace(lo, hi, points)
    f = factors_at_offsets(polys, theta, b).max(axis=0)
    k = int(np.argmin(f))
    h = b[1] - b[0]
    b2 = np.linspace(b[k] - 2 * h, b[k] + 2 * h, points)
    f2 = factors_at_offsets(polys, theta, b2).max(axis=0)
    return float(min(f.min(), f2.min()))
