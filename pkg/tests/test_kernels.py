"""Backend agreement: the compiled kernels must match the pure-Python ones."""

import math
import random

import numpy as np
import pytest

from womgraph import authority, kernels
from womgraph.kernels import _pykernels

try:
    from womgraph.kernels import _ckernels
except ImportError:  # pragma: no cover - environment without the extension
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels unavailable")

from oracles import random_graph


def csr_fixture(seed, n=25, p=0.25):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    nodes, indptr, indices, weights = authority._csr(g, "out")
    _, in_indptr, in_indices, in_w = authority._csr(g, "in")
    return nodes, (indptr, indices, weights), (in_indptr, in_indices, in_w)


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


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    assert _pykernels.BACKEND == "python"


@needs_ext
def test_pagerank_backends_identical():
    for seed in range(5):
        _, (indptr, indices, weights), _ = csr_fixture(seed)
        tprob, dang = pagerank_inputs(indptr, indices, weights)
        n = len(indptr) - 1
        r_c = np.full(n, 1.0 / n)
        r_p = np.full(n, 1.0 / n)
        got_c = _ckernels.pagerank_iterate(indptr, indices, tprob, dang, 0.85, 1e-12, 300, r_c)
        got_p = _pykernels.pagerank_iterate(indptr, indices, tprob, dang, 0.85, 1e-12, 300, r_p)
        assert got_c == got_p  # same iteration count and residual
        assert np.array_equal(r_c, r_p)  # bit-identical vectors


@needs_ext
def test_hits_backends_identical():
    for seed in range(5):
        _, (op, oi, ow), (ip, ii, iw) = csr_fixture(seed + 50)
        n = len(op) - 1
        h_c = np.full(n, 1.0 / math.sqrt(n))
        a_c = np.full(n, 1.0 / math.sqrt(n))
        h_p = h_c.copy()
        a_p = a_c.copy()
        got_c = _ckernels.hits_iterate(op, oi, ow, ip, ii, iw, 1e-12, 300, h_c, a_c)
        got_p = _pykernels.hits_iterate(op, oi, ow, ip, ii, iw, 1e-12, 300, h_p, a_p)
        assert got_c == got_p
        assert np.array_equal(h_c, h_p)
        assert np.array_equal(a_c, a_p)


@needs_ext
def test_eigenvector_backends_identical():
    for seed in range(5):
        _, _, (ip, ii, iw) = csr_fixture(seed + 100)
        n = len(ip) - 1
        x_c = np.full(n, 1.0 / math.sqrt(n))
        x_p = x_c.copy()
        got_c = _ckernels.eigenvector_iterate(ip, ii, iw, 1e-12, 2000, x_c)
        got_p = _pykernels.eigenvector_iterate(ip, ii, iw, 1e-12, 2000, x_p)
        assert got_c == got_p
        assert np.array_equal(x_c, x_p)


def test_python_fallback_powers_authority():
    """The public API must work when routed through the fallback kernels."""
    import unittest.mock as mock

    rng = random.Random(200)
    g = random_graph(rng, 15, 0.3)
    baseline = authority.pagerank(g).scores
    with mock.patch.object(authority, "pagerank_iterate", _pykernels.pagerank_iterate):
        fallback = authority.pagerank(g).scores
    assert fallback == baseline
