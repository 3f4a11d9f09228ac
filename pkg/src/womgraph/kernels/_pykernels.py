"""Pure-Python power-iteration kernels (fallback backend).

Loop structure and floating-point operation order mirror the compiled
backend exactly, so both produce identical results at our scales; the
compiled one is just faster. See benchmarks/bench_kernels.py.
"""

import math

BACKEND = "python"


def pagerank_iterate(indptr, indices, tprob, is_dangling, damping, tol, max_iter, rank):
    """In-place weighted PageRank power iteration over a CSR graph.

    ``tprob`` holds per-edge transition probabilities (weight / out-weight).
    Returns (iterations, last L1 residual).
    """
    n = len(rank)
    indptr = list(indptr)
    indices = list(indices)
    tprob = list(tprob)
    dangling_nodes = [u for u in range(n) if is_dangling[u]]
    r = [float(x) for x in rank]
    new = [0.0] * n
    iters = 0
    diff = float("inf")
    while iters < max_iter and diff >= tol:
        for i in range(n):
            new[i] = 0.0
        dangling = 0.0
        for u in dangling_nodes:
            dangling += r[u]
        for u in range(n):
            ru = r[u]
            for e in range(indptr[u], indptr[u + 1]):
                new[indices[e]] += ru * tprob[e]
        base = (damping * dangling + (1.0 - damping)) / n
        diff = 0.0
        for i in range(n):
            val = damping * new[i] + base
            diff += abs(val - r[i])
            r[i] = val
        iters += 1
    for i in range(n):
        rank[i] = r[i]
    return iters, diff


def _l2_normalize(vec):
    norm = 0.0
    for x in vec:
        norm += x * x
    norm = math.sqrt(norm)
    if norm > 0.0:
        for i in range(len(vec)):
            vec[i] /= norm
    return norm


def hits_iterate(out_indptr, out_indices, out_w,
                 in_indptr, in_indices, in_w,
                 tol, max_iter, hub, auth):
    """In-place weighted HITS; returns (iterations, last L1 residual)."""
    n = len(hub)
    out_indptr = list(out_indptr)
    out_indices = list(out_indices)
    out_w = list(out_w)
    in_indptr = list(in_indptr)
    in_indices = list(in_indices)
    in_w = list(in_w)
    h = [float(x) for x in hub]
    a = [float(x) for x in auth]
    iters = 0
    diff = float("inf")
    while iters < max_iter and diff >= tol:
        new_a = [0.0] * n
        for v in range(n):
            acc = 0.0
            for e in range(in_indptr[v], in_indptr[v + 1]):
                acc += in_w[e] * h[in_indices[e]]
            new_a[v] = acc
        _l2_normalize(new_a)
        new_h = [0.0] * n
        for u in range(n):
            acc = 0.0
            for e in range(out_indptr[u], out_indptr[u + 1]):
                acc += out_w[e] * new_a[out_indices[e]]
            new_h[u] = acc
        _l2_normalize(new_h)
        diff = 0.0
        for i in range(n):
            diff += abs(new_a[i] - a[i]) + abs(new_h[i] - h[i])
        a, h = new_a, new_h
        iters += 1
    for i in range(n):
        hub[i] = h[i]
        auth[i] = a[i]
    return iters, diff


def eigenvector_iterate(in_indptr, in_indices, in_w, tol, max_iter, x):
    """In-place shifted power iteration on the in-weighted adjacency.

    Iterates x <- normalize(x + A^T x); the +x shift keeps the fixed
    direction of A^T while converging on periodic and defective spectra.
    Returns (iterations, last L1 residual, last pre-normalization norm).
    """
    n = len(x)
    in_indptr = list(in_indptr)
    in_indices = list(in_indices)
    in_w = list(in_w)
    cur = [float(v) for v in x]
    iters = 0
    diff = float("inf")
    norm = 0.0
    while iters < max_iter and diff >= tol:
        new = [0.0] * n
        for v in range(n):
            acc = cur[v]
            for e in range(in_indptr[v], in_indptr[v + 1]):
                acc += in_w[e] * cur[in_indices[e]]
            new[v] = acc
        norm = _l2_normalize(new)
        if norm == 0.0:
            cur = new
            iters += 1
            break
        diff = 0.0
        for i in range(n):
            diff += abs(new[i] - cur[i])
        cur = new
        iters += 1
    for i in range(n):
        x[i] = cur[i]
    return iters, diff, norm
