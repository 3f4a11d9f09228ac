"""User authority measures over the interaction graph.

All methods return a ScoreVector covering every node; rankings break
score ties by user id ascending. The power-iteration methods run on CSR
arrays through the kernels backend (compiled when available).
"""

import heapq
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import NonConvergence, ZeroVector
from .graph import InteractionGraph
from .kernels import eigenvector_iterate, hits_iterate, pagerank_iterate
from .model import POST, GroupActivityLog

INF = float("inf")


@dataclass(frozen=True)
class PowerIterationParams:
    damping: float = 0.85
    tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must lie in (0, 1)")
        if self.tol <= 0 or self.max_iter < 1:
            raise ValueError("tol must be > 0 and max_iter >= 1")


@dataclass
class ScoreVector:
    scores: dict[str, float]
    method: str


def _csr(graph: InteractionGraph, direction: str):
    """CSR arrays over the sorted node list; deterministic layout."""
    nodes = sorted(graph.nodes)
    index = {u: i for i, u in enumerate(nodes)}
    n = len(nodes)
    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for (u, v), w in sorted(graph.edges.items()):
        if direction == "out":
            adj[index[u]].append((index[v], w))
        else:
            adj[index[v]].append((index[u], w))
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
    return nodes, indptr, indices, weights


def _warn_nonconvergence(method, iters, residual, tol):
    warnings.warn(
        f"{method} hit max_iter={iters} with residual {residual:.3e} (tol {tol:.1e})",
        NonConvergence,
        stacklevel=3,
    )


def pagerank(graph: InteractionGraph, params: PowerIterationParams = PowerIterationParams()) -> ScoreVector:
    """Weighted PageRank; dangling mass and teleport spread uniformly."""
    if not graph.nodes:
        raise ValueError("graph is empty")
    nodes, indptr, indices, weights = _csr(graph, "out")
    n = len(nodes)
    out_weight = np.zeros(n)
    for u in range(n):
        out_weight[u] = weights[indptr[u] : indptr[u + 1]].sum()
    is_dangling = (out_weight == 0.0).astype(np.uint8)
    tprob = np.zeros_like(weights)
    for u in range(n):
        if out_weight[u] > 0:
            tprob[indptr[u] : indptr[u + 1]] = weights[indptr[u] : indptr[u + 1]] / out_weight[u]
    rank = np.full(n, 1.0 / n)
    iters, residual = pagerank_iterate(
        indptr, indices, tprob, is_dangling, params.damping, params.tol, params.max_iter, rank
    )
    if residual >= params.tol:
        _warn_nonconvergence("pagerank", iters, residual, params.tol)
    return ScoreVector({u: float(rank[i]) for i, u in enumerate(nodes)}, "pagerank")


def hits(graph: InteractionGraph, tol: float = 1e-10, max_iter: int = 200):
    """Weighted HITS. Returns (hub ScoreVector, authority ScoreVector)."""
    if not graph.nodes:
        raise ValueError("graph is empty")
    nodes, out_indptr, out_indices, out_w = _csr(graph, "out")
    _, in_indptr, in_indices, in_w = _csr(graph, "in")
    n = len(nodes)
    hub = np.full(n, 1.0 / math.sqrt(n))
    auth = np.full(n, 1.0 / math.sqrt(n))
    iters, residual = hits_iterate(
        out_indptr, out_indices, out_w, in_indptr, in_indices, in_w, tol, max_iter, hub, auth
    )
    if residual >= tol:
        _warn_nonconvergence("hits", iters, residual, tol)
    return (
        ScoreVector({u: float(hub[i]) for i, u in enumerate(nodes)}, "hits_hub"),
        ScoreVector({u: float(auth[i]) for i, u in enumerate(nodes)}, "hits_auth"),
    )


def eigenvector_centrality(graph: InteractionGraph, tol: float = 1e-10, max_iter: int = 500) -> ScoreVector:
    """Dominant eigenvector of the weighted adjacency, in-edge convention.

    Uses the shifted iteration x <- normalize(x + A^T x), which has the
    same fixed direction but also converges on periodic spectra.
    """
    if not graph.nodes:
        raise ValueError("graph is empty")
    if not graph.edges:
        raise ZeroVector("graph has no edges")
    nodes, in_indptr, in_indices, in_w = _csr(graph, "in")
    n = len(nodes)
    x = np.full(n, 1.0 / math.sqrt(n))
    iters, residual, norm = eigenvector_iterate(in_indptr, in_indices, in_w, tol, max_iter, x)
    if norm == 0.0:
        # adjacency is nilpotent (no cycles feeding back); scores vanish
        return ScoreVector({u: 0.0 for u in nodes}, "eigenvector")
    if residual >= tol:
        _warn_nonconvergence("eigenvector", iters, residual, tol)
    return ScoreVector({u: float(x[i]) for i, u in enumerate(nodes)}, "eigenvector")


def _edge_lengths(graph: InteractionGraph, use_weights: bool):
    """Adjacency with path lengths: 1/weight when weighted, else 1."""
    adj: dict[str, list[tuple[str, float]]] = {u: [] for u in graph.nodes}
    for (u, v), w in sorted(graph.edges.items()):
        adj[u].append((v, 1.0 / w if use_weights else 1.0))
    return adj


def _dijkstra(adj, source):
    dist = {source: 0.0}
    settled = {}
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in settled:
            continue
        settled[v] = d
        for w, length in adj[v]:
            nd = d + length
            if w not in settled and (w not in dist or nd < dist[w]):
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return settled


def _brandes_sssp(adj, source):
    """Dijkstra with shortest-path counts and predecessor lists."""
    S = []
    P = {v: [] for v in adj}
    sigma = {v: 0.0 for v in adj}
    sigma[source] = 1.0
    seen = {source: 0.0}
    settled = {}
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in settled:
            continue
        settled[v] = d
        S.append(v)
        sigma_v = sigma[v]
        for w, length in adj[v]:
            if w in settled:
                continue
            nd = d + length
            if w not in seen or nd < seen[w]:
                seen[w] = nd
                sigma[w] = sigma_v
                P[w] = [v]
                heapq.heappush(heap, (nd, w))
            elif nd == seen[w]:
                sigma[w] += sigma_v
                P[w].append(v)
    return S, P, sigma


def betweenness(graph: InteractionGraph, use_weights: bool = True) -> ScoreVector:
    """Exact directed betweenness; unnormalized shortest-path pair counts."""
    adj = _edge_lengths(graph, use_weights)
    bc = {v: 0.0 for v in graph.nodes}
    for s in sorted(graph.nodes):
        S, P, sigma = _brandes_sssp(adj, s)
        delta = {v: 0.0 for v in S}
        for w in reversed(S):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in P[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return ScoreVector(bc, "betweenness")


def closeness(graph: InteractionGraph, use_weights: bool = True) -> ScoreVector:
    """Harmonic closeness on outgoing distances; unreachable adds 0."""
    adj = _edge_lengths(graph, use_weights)
    scores = {}
    for u in sorted(graph.nodes):
        dist = _dijkstra(adj, u)
        scores[u] = sum(1.0 / d for v, d in sorted(dist.items()) if v != u)
    return ScoreVector(scores, "closeness")


def zscore(log: GroupActivityLog) -> ScoreVector:
    """Expertise z-score: answers = reactions given, questions = posts made."""
    answers = {u: 0 for u in log.users}
    questions = {u: 0 for u in log.users}
    for c in log.contents:
        if c.kind == POST:
            questions[c.author] += 1
    for r in log.reactions:
        if log.content(r.target).author != r.reactor:
            answers[r.reactor] += 1
    scores = {}
    for u in log.users:
        a, q = answers[u], questions[u]
        scores[u] = (a - q) / math.sqrt(a + q) if a + q > 0 else 0.0
    return ScoreVector(scores, "zscore")


def top_k(scores: ScoreVector, k: int) -> list[tuple[str, float]]:
    """Top k by score descending, ties by user id ascending."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ordered = sorted(scores.scores.items(), key=lambda item: (-item[1], item[0]))
    return ordered[:k]


def full_ranking(scores: ScoreVector) -> list[tuple[str, float]]:
    return top_k(scores, len(scores.scores)) if scores.scores else []
