"""Topic-sensitive weighted interaction graph and structural statistics.

An edge u -> v means u reacted to content authored by v; its weight is
the sum over those reactions of (reaction-type base weight x boosted
relevance of the reacted content). Self-reactions are dropped and every
log member appears as a node, including isolated ones.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import UnsupportedFormat
from .ingest import Preprocessor
from .model import GroupActivityLog
from .relevance import DEFAULT_ALPHA, RelatednessTable, boosted_relevance, content_relevance


@dataclass(frozen=True)
class ReactionWeights:
    like_on_comment: float = 1.0
    like: float = 2.0
    comment_reaction: float = 4.0
    share: float = 8.0

    def __post_init__(self):
        for name in ("like_on_comment", "like", "comment_reaction", "share"):
            if getattr(self, name) <= 0:
                raise ValueError(f"reaction weight {name} must be positive")

    def of(self, kind: str) -> float:
        return getattr(self, kind)


@dataclass
class InteractionGraph:
    nodes: set[str]
    edges: dict[tuple[str, str], float]

    def out_adjacency(self) -> dict[str, list[tuple[str, float]]]:
        adj = {u: [] for u in self.nodes}
        for (u, v), w in sorted(self.edges.items()):
            adj[u].append((v, w))
        return adj

    def in_adjacency(self) -> dict[str, list[tuple[str, float]]]:
        adj = {u: [] for u in self.nodes}
        for (u, v), w in sorted(self.edges.items()):
            adj[v].append((u, w))
        return adj

    def undirected_adjacency(self) -> dict[str, set[str]]:
        adj = {u: set() for u in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def total_weight(self) -> float:
        return sum(self.edges.values())

    def scaled(self, factor: float) -> "InteractionGraph":
        return InteractionGraph(
            nodes=set(self.nodes),
            edges={e: w * factor for e, w in self.edges.items()},
        )


def content_boosts(
    log: GroupActivityLog,
    topic_words,
    table: RelatednessTable,
    alpha: float = DEFAULT_ALPHA,
    preprocess=None,
) -> dict[str, float]:
    """Boosted relevance of every content item, keyed by content id."""
    if preprocess is None:
        preprocess = Preprocessor()
    boosts = {}
    for c in log.contents:
        rel = content_relevance(preprocess(c.text), topic_words, table)
        boosts[c.content_id] = boosted_relevance(rel, alpha)
    return boosts


def build_interaction_graph(
    log: GroupActivityLog,
    topic_words,
    table: RelatednessTable,
    weights: ReactionWeights = ReactionWeights(),
    alpha: float = DEFAULT_ALPHA,
    preprocess=None,
    workers: int = 1,
) -> InteractionGraph:
    """Accumulate reactions into the weighted directed graph.

    Deterministic and order-independent: per-edge contributions are
    sorted before summing, so permuting the reaction list or changing
    the worker count cannot change any weight bit.
    """
    boosts = content_boosts(log, topic_words, table, alpha, preprocess)

    def shard_contributions(reactions):
        contrib: dict[tuple[str, str], list[float]] = {}
        for r in reactions:
            author = log.content(r.target).author
            if r.reactor == author:
                continue
            contrib.setdefault((r.reactor, author), []).append(
                weights.of(r.kind) * boosts[r.target]
            )
        return contrib

    if workers <= 1 or len(log.reactions) < 2 * workers:
        shards = [shard_contributions(log.reactions)]
    else:
        chunk = (len(log.reactions) + workers - 1) // workers
        pieces = [log.reactions[i : i + chunk] for i in range(0, len(log.reactions), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(shard_contributions, pieces))

    merged: dict[tuple[str, str], list[float]] = {}
    for shard in shards:
        for edge, values in shard.items():
            merged.setdefault(edge, []).extend(values)

    edges = {edge: sum(sorted(values)) for edge, values in merged.items()}
    return InteractionGraph(nodes=set(log.users), edges=edges)


def degrees(graph: InteractionGraph, mode: str) -> dict[str, int]:
    if mode not in ("in", "out", "total"):
        raise ValueError(f"unknown degree mode {mode!r}")
    deg = {u: 0 for u in graph.nodes}
    for u, v in graph.edges:
        if mode in ("out", "total"):
            deg[u] += 1
        if mode in ("in", "total"):
            deg[v] += 1
    return deg


@dataclass
class DegreeHistogram:
    mode: str
    buckets: dict[int, int]
    ccdf: dict[int, float]


def degree_distribution(graph: InteractionGraph, mode: str = "total") -> DegreeHistogram:
    """Exact degree histogram plus the fraction of users with degree >= d."""
    deg = degrees(graph, mode)
    buckets: dict[int, int] = {}
    for d in deg.values():
        buckets[d] = buckets.get(d, 0) + 1
    n = len(graph.nodes)
    ccdf = {}
    at_least = n
    for d in sorted(buckets):
        ccdf[d] = at_least / n
        at_least -= buckets[d]
    return DegreeHistogram(mode=mode, buckets=buckets, ccdf=ccdf)


def export_graph(graph: InteractionGraph, fmt: str = "edge-list") -> str:
    """Deterministic text export; nodes and edges sorted by id."""
    nodes = sorted(graph.nodes)
    edges = sorted(graph.edges.items())
    if fmt == "edge-list":
        lines = [f"# nodes: {len(nodes)}", f"# edges: {len(edges)}"]
        lines += [f"node\t{u}" for u in nodes]
        lines += [f"{u}\t{v}\t{w!r}" for (u, v), w in edges]
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        lines = ["digraph interaction {"]
        lines += [f'  "{u}";' for u in nodes]
        lines += [f'  "{u}" -> "{v}" [weight={w!r}];' for (u, v), w in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnsupportedFormat(f"unknown export format {fmt!r}")


def import_graph(text: str) -> InteractionGraph:
    """Inverse of the edge-list export."""
    nodes: set[str] = set()
    edges: dict[tuple[str, str], float] = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if parts[0] == "node" and len(parts) == 2:
            nodes.add(parts[1])
        elif len(parts) == 3:
            u, v, w = parts
            nodes.update((u, v))
            edges[(u, v)] = float(w)
        else:
            raise UnsupportedFormat(f"bad edge-list line {line!r}")
    return InteractionGraph(nodes=nodes, edges=edges)
