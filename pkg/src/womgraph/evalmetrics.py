"""Evaluation metrics: votes baselines, Pearson, MAP, NDCG and reports."""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import authority, campaign
from .errors import LengthMismatch, NoRelevantUsers, ZeroVariance
from .graph import InteractionGraph, ReactionWeights
from .ingest import Preprocessor
from .model import GroupActivityLog
from .relevance import RelatednessTable, content_relevance


@dataclass
class VoteVector:
    received: dict[str, float]
    variant: str  # "votes" or "topical_votes"


def votes(log: GroupActivityLog, weights: ReactionWeights = ReactionWeights()) -> VoteVector:
    """Weighted reaction mass each user received; self-reactions excluded."""
    received = {u: 0.0 for u in log.users}
    for r in log.reactions:
        author = log.content(r.target).author
        if author != r.reactor:
            received[author] += weights.of(r.kind)
    return VoteVector(received, "votes")


def topical_votes(log: GroupActivityLog, topic_words, table: RelatednessTable,
                  weights: ReactionWeights = ReactionWeights(),
                  preprocess=None) -> VoteVector:
    """Like votes, but only reactions on topically relevant content count."""
    if preprocess is None:
        preprocess = Preprocessor()
    relevant = {
        c.content_id
        for c in log.contents
        if content_relevance(preprocess(c.text), topic_words, table) > 0.0
    }
    received = {u: 0.0 for u in log.users}
    for r in log.reactions:
        if r.target not in relevant:
            continue
        author = log.content(r.target).author
        if author != r.reactor:
            received[author] += weights.of(r.kind)
    return VoteVector(received, "topical_votes")


def pearson(x: list[float], y: list[float]) -> float:
    """Sample Pearson correlation coefficient."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise LengthMismatch("need at least two points")
    mx = sum(x) / n
    my = sum(y) / n
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0.0 or syy == 0.0:
        raise ZeroVariance("an argument has zero variance")
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    return sxy / math.sqrt(sxx * syy)


def _ranks(values: list[float]) -> list[float]:
    """Average ranks, for the rank-based correlation variant."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for p in range(i, j + 1):
            ranks[order[p]] = avg
        i = j + 1
    return ranks


def average_precision(ranked: list[tuple[str, float]], labels: dict[str, int],
                      cutoff: int) -> float:
    """Binary-relevance average precision at ``cutoff``.

    Sum of precision@i over relevant ranked positions i <= cutoff,
    normalized by min(total relevant, cutoff).
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    total_relevant = sum(1 for g in labels.values() if g > 0)
    if total_relevant == 0:
        raise NoRelevantUsers("no user has a positive label")
    hits = 0
    acc = Fraction(0)  # exact rational sum; rounded once at the end
    for pos, (user, _) in enumerate(ranked[:cutoff], start=1):
        if labels.get(user, 0) > 0:
            hits += 1
            acc += Fraction(hits, pos)
    return float(acc / min(total_relevant, cutoff))


mean_average_precision = average_precision  # per-group AP; the report layer averages


def ndcg(ranked: list[tuple[str, float]], labels: dict[str, int], cutoff: int) -> float:
    """Graded NDCG with linear gain and 1/log2(pos+1) discount."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if not any(g > 0 for g in labels.values()):
        raise NoRelevantUsers("no user has a positive label")
    dcg = 0.0
    for pos, (user, _) in enumerate(ranked[:cutoff], start=1):
        gain = labels.get(user, 0)
        if gain:
            dcg += gain / math.log2(pos + 1)
    ideal_gains = sorted(labels.values(), reverse=True)[:cutoff]
    idcg = sum(g / math.log2(pos + 1) for pos, g in enumerate(ideal_gains, start=1) if g)
    return dcg / idcg


def correlation_report(graph: InteractionGraph, log: GroupActivityLog, topic_words,
                       table: RelatednessTable, methods: list[str], k_values: list[int],
                       weights: ReactionWeights = ReactionWeights(),
                       preprocess=None, rank_based: bool = False) -> list[dict]:
    """Correlation of each method's top-k scores with votes and topical votes.

    One row per (method, k); ``rank_based`` correlates rank positions
    instead of raw values.
    """
    vote_vec = votes(log, weights)
    tvote_vec = topical_votes(log, topic_words, table, weights, preprocess)
    rows = []
    for method in methods:
        scores = campaign.run_method(graph, method, log)
        ranking = authority.full_ranking(scores)
        for k in k_values:
            top = ranking[:k]
            xs = [s for _, s in top]
            ys = [vote_vec.received.get(u, 0.0) for u, _ in top]
            ts = [tvote_vec.received.get(u, 0.0) for u, _ in top]
            if rank_based:
                xs, ys, ts = _ranks(xs), _ranks(ys), _ranks(ts)
            row = {"method": method, "k": k}
            try:
                row["corr_votes"] = pearson(xs, ys)
            except ZeroVariance:
                row["corr_votes"] = float("nan")
            try:
                row["corr_topical_votes"] = pearson(xs, ts)
            except ZeroVariance:
                row["corr_topical_votes"] = float("nan")
            rows.append(row)
    return rows


def topic_mi_vs_correlation(graph_builder, log: GroupActivityLog, table: RelatednessTable,
                            group_topic, topics: list, method: str, k: int,
                            weights: ReactionWeights = ReactionWeights(),
                            preprocess=None) -> list[dict]:
    """Per candidate topic: mean relatedness to the group topic and the
    top-k correlation of ``method`` with that topic's topical votes.

    ``graph_builder`` maps a topic-word set to an InteractionGraph (the
    graph is topic-sensitive, so each topic gets its own build). Output
    sorted by relatedness descending.
    """
    rows = []
    for topic_words in topics:
        pair_scores = [
            table.score(t, g) for t in sorted(set(topic_words)) for g in sorted(set(group_topic))
        ]
        mi = sum(pair_scores) / len(pair_scores) if pair_scores else 0.0
        graph = graph_builder(topic_words)
        scores = campaign.run_method(graph, method, log)
        top = authority.top_k(scores, k)
        tvotes = topical_votes(log, topic_words, table, weights, preprocess)
        xs = [s for _, s in top]
        ys = [tvotes.received.get(u, 0.0) for u, _ in top]
        try:
            corr = pearson(xs, ys)
        except ZeroVariance:
            corr = float("nan")
        rows.append({"topic": " ".join(sorted(set(topic_words))), "mi": mi, "correlation": corr})
    rows.sort(key=lambda row: (-row["mi"], row["topic"]))
    return rows
