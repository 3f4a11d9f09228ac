# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled power-iteration kernels.

Same loop structure and floating-point operation order as _pykernels,
which serves as the fallback when this extension is not built.
"""

from libc.math cimport fabs, sqrt

BACKEND = "cython"


def pagerank_iterate(long[::1] indptr, long[::1] indices, double[::1] tprob,
                     unsigned char[::1] is_dangling, double damping,
                     double tol, long max_iter, double[::1] rank):
    cdef Py_ssize_t n = rank.shape[0]
    cdef Py_ssize_t u, i, e
    cdef double ru, dangling, base, val, diff
    cdef long iters = 0
    cdef double[::1] new = rank.copy()
    diff = float("inf")
    while iters < max_iter and diff >= tol:
        for i in range(n):
            new[i] = 0.0
        dangling = 0.0
        for u in range(n):
            if is_dangling[u]:
                dangling += rank[u]
        for u in range(n):
            ru = rank[u]
            for e in range(indptr[u], indptr[u + 1]):
                new[indices[e]] += ru * tprob[e]
        base = (damping * dangling + (1.0 - damping)) / n
        diff = 0.0
        for i in range(n):
            val = damping * new[i] + base
            diff += fabs(val - rank[i])
            rank[i] = val
        iters += 1
    return iters, diff


cdef double _l2_normalize(double[::1] vec) nogil:
    cdef Py_ssize_t i, n = vec.shape[0]
    cdef double norm = 0.0
    for i in range(n):
        norm += vec[i] * vec[i]
    norm = sqrt(norm)
    if norm > 0.0:
        for i in range(n):
            vec[i] /= norm
    return norm


def hits_iterate(long[::1] out_indptr, long[::1] out_indices, double[::1] out_w,
                 long[::1] in_indptr, long[::1] in_indices, double[::1] in_w,
                 double tol, long max_iter, double[::1] hub, double[::1] auth):
    cdef Py_ssize_t n = hub.shape[0]
    cdef Py_ssize_t u, v, i, e
    cdef double acc, diff
    cdef long iters = 0
    cdef double[::1] new_a = auth.copy()
    cdef double[::1] new_h = hub.copy()
    diff = float("inf")
    while iters < max_iter and diff >= tol:
        for v in range(n):
            acc = 0.0
            for e in range(in_indptr[v], in_indptr[v + 1]):
                acc += in_w[e] * hub[in_indices[e]]
            new_a[v] = acc
        _l2_normalize(new_a)
        for u in range(n):
            acc = 0.0
            for e in range(out_indptr[u], out_indptr[u + 1]):
                acc += out_w[e] * new_a[out_indices[e]]
            new_h[u] = acc
        _l2_normalize(new_h)
        diff = 0.0
        for i in range(n):
            diff += fabs(new_a[i] - auth[i]) + fabs(new_h[i] - hub[i])
        for i in range(n):
            auth[i] = new_a[i]
            hub[i] = new_h[i]
        iters += 1
    return iters, diff


def eigenvector_iterate(long[::1] in_indptr, long[::1] in_indices, double[::1] in_w,
                        double tol, long max_iter, double[::1] x):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t v, i, e
    cdef double acc, diff, norm
    cdef long iters = 0
    cdef double[::1] new = x.copy()
    diff = float("inf")
    norm = 0.0
    while iters < max_iter and diff >= tol:
        for v in range(n):
            acc = x[v]
            for e in range(in_indptr[v], in_indptr[v + 1]):
                acc += in_w[e] * x[in_indices[e]]
            new[v] = acc
        norm = _l2_normalize(new)
        if norm == 0.0:
            for i in range(n):
                x[i] = new[i]
            iters += 1
            break
        diff = 0.0
        for i in range(n):
            diff += fabs(new[i] - x[i])
        for i in range(n):
            x[i] = new[i]
        iters += 1
    return iters, diff, norm
