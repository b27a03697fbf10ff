# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the kernels in ``_kernels_py``; same signatures and results."""
import numpy as np
cimport numpy as cnp
from libc.math cimport INFINITY

cnp.import_array()


def project(const double[:, ::1] rel, starts, const double[:, ::1] centroids, cos_t, sin_t):
    cdef const double[::1] ct = np.ascontiguousarray(cos_t, dtype=np.float64)
    cdef const double[::1] st = np.ascontiguousarray(sin_t, dtype=np.float64)
    cdef const cnp.intp_t[::1] s = np.ascontiguousarray(starts, dtype=np.intp)
    cdef Py_ssize_t m = ct.shape[0], n = centroids.shape[0]
    center_a = np.empty((m, n))
    up_a = np.empty((m, n))
    down_a = np.empty((m, n))
    cdef double[:, ::1] center = center_a
    cdef double[:, ::1] up = up_a
    cdef double[:, ::1] down = down_a
    cdef Py_ssize_t k, i, v
    cdef double c, sn, d, hi, lo
    with nogil:
        for k in range(m):
            c = ct[k]
            sn = st[k]
            for i in range(n):
                center[k, i] = c * centroids[i, 0] + sn * centroids[i, 1]
                hi = -INFINITY
                lo = INFINITY
                for v in range(s[i], s[i + 1]):
                    d = c * rel[v, 0] + sn * rel[v, 1]
                    if d > hi:
                        hi = d
                    if d < lo:
                        lo = d
                up[k, i] = hi
                down[k, i] = -lo
    return center_a, up_a, down_a


def pairwise_cstar(const double[:, ::1] center, const double[:, ::1] up, const double[:, ::1] down):
    cdef Py_ssize_t m = center.shape[0], n = center.shape[1]
    out_a = np.zeros(m)
    cdef double[::1] out = out_a
    cdef Py_ssize_t k, i, j
    cdef double best, r
    with nogil:
        for k in range(m):
            best = 0.0
            for i in range(n):
                for j in range(n):
                    if i == j:
                        continue
                    r = (center[k, j] - center[k, i]) / (up[k, i] + down[k, j])
                    if r > best:
                        best = r
            out[k] = best
    return out_a


def feasible_bounds(const double[:, ::1] center, const double[:, ::1] up, const double[:, ::1] down, c):
    cdef Py_ssize_t m = center.shape[0], n = center.shape[1]
    c_arr = np.asarray(c, dtype=np.float64)
    if c_arr.ndim == 0:
        c_arr = np.full(m, float(c_arr))
    cdef const double[::1] cc = np.ascontiguousarray(c_arr)
    lo_a = np.empty(m)
    hi_a = np.empty(m)
    cdef double[::1] lo = lo_a
    cdef double[::1] hi = hi_a
    cdef Py_ssize_t k, i
    cdef double a, b, x, y
    with nogil:
        for k in range(m):
            a = -INFINITY
            b = INFINITY
            for i in range(n):
                x = center[k, i] - cc[k] * down[k, i]
                y = center[k, i] + cc[k] * up[k, i]
                if x > a:
                    a = x
                if y < b:
                    b = y
            lo[k] = a
            hi[k] = b
    return lo_a, hi_a


cdef inline bint _feasible(const double[:, ::1] center, const double[:, ::1] up,
                           const double[:, ::1] down, Py_ssize_t k, double c) noexcept nogil:
    cdef Py_ssize_t i, n = center.shape[1]
    cdef double a = -INFINITY, b = INFINITY, x, y
    for i in range(n):
        x = center[k, i] - c * down[k, i]
        y = center[k, i] + c * up[k, i]
        if x > a:
            a = x
        if y < b:
            b = y
    return a <= b


def bisect_cmin(const double[:, ::1] center, const double[:, ::1] up, const double[:, ::1] down, double c_tol):
    cdef Py_ssize_t m = center.shape[0]
    out_a = np.empty(m)
    cdef double[::1] out = out_a
    cdef Py_ssize_t k
    cdef double lo, hi, mid
    with nogil:
        for k in range(m):
            if _feasible(center, up, down, k, 0.0):
                out[k] = 0.0
                continue
            lo = 0.0
            hi = 1.0
            while not _feasible(center, up, down, k, hi):
                lo = hi
                hi = hi * 2.0
            while hi - lo > c_tol:
                mid = 0.5 * (lo + hi)
                if _feasible(center, up, down, k, mid):
                    hi = mid
                else:
                    lo = mid
            out[k] = hi
    return out_a
