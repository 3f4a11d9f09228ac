"""Benchmark the compiled power-iteration kernels against the pure-Python
fallback on the same CSR inputs.

Usage:
    python benchmarks/bench_kernels.py [--nodes N] [--avg-degree D] [--reps R]
"""

import argparse
import math
import random
import time

import numpy as np

from womgraph import kernels
from womgraph.kernels import _pykernels

try:
    from womgraph.kernels import _ckernels
except ImportError:
    _ckernels = None


def random_csr(rng, n, avg_degree):
    """Directed random graph as (out CSR, in CSR) arrays."""
    p = avg_degree / max(n - 1, 1)
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                w = rng.uniform(0.1, 5.0)
                out_adj[u].append((v, w))
                in_adj[v].append((u, w))

    def to_csr(adj):
        indptr = np.zeros(n + 1, dtype=np.int64)
        for i, lst in enumerate(adj):
            indptr[i + 1] = indptr[i] + len(lst)
        indices = np.zeros(indptr[-1], dtype=np.int64)
        weights = np.zeros(indptr[-1], dtype=np.float64)
        pos = 0
        for lst in adj:
            for j, w in sorted(lst):
                indices[pos] = j
                weights[pos] = w
                pos += 1
        return indptr, indices, weights

    return to_csr(out_adj), to_csr(in_adj)


def pagerank_inputs(indptr, indices, weights):
    n = len(indptr) - 1
    out_weight = np.zeros(n)
    for u in range(n):
        out_weight[u] = weights[indptr[u]:indptr[u + 1]].sum()
    is_dangling = (out_weight == 0.0).astype(np.uint8)
    tprob = np.array(weights)
    for u in range(n):
        if out_weight[u] > 0:
            tprob[indptr[u]:indptr[u + 1]] /= out_weight[u]
    return tprob, is_dangling


def time_call(fn, reps):
    best = math.inf
    result = None
    for _ in range(reps):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=5000)
    parser.add_argument("--avg-degree", type=float, default=8.0)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels unavailable; nothing to compare")
        return

    rng = random.Random(args.seed)
    (op, oi, ow), (ip, ii, iw) = random_csr(rng, args.nodes, args.avg_degree)
    n = args.nodes
    tprob, dang = pagerank_inputs(op, oi, ow)
    print(f"active backend: {kernels.BACKEND}")
    print(f"graph: {n} nodes, {len(oi)} edges, best of {args.reps} runs\n")
    print(f"{'kernel':<14}{'cython (s)':>12}{'python (s)':>12}{'speedup':>10}")

    cases = [
        ("pagerank", lambda mod: mod.pagerank_iterate(
            op, oi, tprob, dang, 0.85, 1e-10, 200, np.full(n, 1.0 / n))),
        ("hits", lambda mod: mod.hits_iterate(
            op, oi, ow, ip, ii, iw, 1e-10, 200,
            np.full(n, 1.0 / math.sqrt(n)), np.full(n, 1.0 / math.sqrt(n)))),
        ("eigenvector", lambda mod: mod.eigenvector_iterate(
            ip, ii, iw, 1e-10, 500, np.full(n, 1.0 / math.sqrt(n)))),
    ]
    for name, call in cases:
        t_c, r_c = time_call(lambda: call(_ckernels), args.reps)
        t_p, r_p = time_call(lambda: call(_pykernels), args.reps)
        assert r_c == r_p, f"{name}: backends disagree"
        print(f"{name:<14}{t_c:>12.4f}{t_p:>12.4f}{t_p / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
