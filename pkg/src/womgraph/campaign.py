"""Influencer selection, reinforced marketing plans and promotion timing."""

import time
from dataclasses import dataclass, field

from . import authority
from .errors import BudgetInfeasible, InvalidParams, UnknownUser
from .graph import InteractionGraph
from .ingest import Preprocessor
from .model import POST, GroupActivityLog
from .structure import SubGroup, weakly_connected_components

METHODS = ("pagerank", "hits", "zscore", "eigen", "betweenness", "closeness")


@dataclass(frozen=True)
class ReinforcementParams:
    k: int = 20
    r: int = 3
    th: int = 50

    def __post_init__(self):
        if not (self.k >= self.r >= 1):
            raise InvalidParams("need k >= r >= 1")
        if self.th < 1:
            raise InvalidParams("need th >= 1")


@dataclass
class Assignment:
    subgroup: SubGroup
    influencers: list[str]
    below_global_topk: list[str] = field(default_factory=list)


@dataclass
class CampaignPlan:
    global_topk: list[tuple[str, float]]
    assignments: list[Assignment]
    skipped: list[tuple[SubGroup, str]]
    coverage: float = 0.0
    recommended_months: list[int] = field(default_factory=list)


def run_method(graph: InteractionGraph, method: str, log: GroupActivityLog = None) -> authority.ScoreVector:
    """Run one named authority measure. ``zscore`` needs the activity log."""
    if method == "pagerank":
        return authority.pagerank(graph)
    if method == "hits":
        return authority.hits(graph)[1]  # authority side ranks the users
    if method == "eigen":
        return authority.eigenvector_centrality(graph)
    if method == "betweenness":
        return authority.betweenness(graph)
    if method == "closeness":
        return authority.closeness(graph)
    if method == "zscore":
        if log is None:
            raise InvalidParams("zscore requires the activity log")
        return authority.zscore(log)
    raise InvalidParams(f"unknown method {method!r}; choose one of {METHODS}")


def select_influencers(graph: InteractionGraph, method: str, k: int,
                       log: GroupActivityLog = None) -> list[tuple[str, float]]:
    return authority.top_k(run_method(graph, method, log), k)


def reinforced_selection(graph: InteractionGraph, scores: authority.ScoreVector,
                         params: ReinforcementParams) -> CampaignPlan:
    """Assign reinforced influencer sets per qualifying sub-group.

    Each sub-group of size >= th receives its top-r members by global
    score, preferring members of the global top-k; fills drawn from
    outside the top-k are flagged. Raises BudgetInfeasible (carrying the
    partial plan, largest sub-groups first) when the k budget cannot
    give every qualifying sub-group min(r, size) influencers.
    """
    missing = graph.nodes - set(scores.scores)
    if missing:
        raise UnknownUser(f"scores missing for {sorted(missing)[:3]}...")

    groups = weakly_connected_components(graph)
    global_topk = authority.top_k(scores, params.k)
    topk_set = {u for u, _ in global_topk}
    rank_key = lambda u: (-scores.scores[u], u)

    plan = CampaignPlan(global_topk=global_topk, assignments=[], skipped=[])
    targeted = []
    for g in groups:
        if g.size < params.th:
            plan.skipped.append((g, "below threshold"))
        else:
            targeted.append(g)

    budget = params.k
    demand = sum(min(params.r, g.size) for g in targeted)
    for g in targeted:  # largest first, per weakly_connected_components order
        need = min(params.r, g.size)
        if budget < need:
            raise BudgetInfeasible(
                f"budget k={params.k} cannot reinforce all sub-groups (need {demand})",
                plan,
            )
        members = sorted(g.members, key=rank_key)
        in_topk = [u for u in members if u in topk_set]
        chosen = in_topk[:need]
        flagged = []
        if len(chosen) < need:
            fillers = [u for u in members if u not in topk_set][: need - len(chosen)]
            chosen = sorted(chosen + fillers, key=rank_key)
            flagged = fillers
        plan.assignments.append(Assignment(g, chosen, flagged))
        budget -= need
    return plan


def coverage_estimate(graph: InteractionGraph, selected: set[str]) -> float:
    """Fraction of members who are selected or reacted to a selected user."""
    unknown = selected - graph.nodes
    if unknown:
        raise UnknownUser(f"not in graph: {sorted(unknown)[:3]}")
    if not graph.nodes:
        return 0.0
    influenced = set(selected)
    for u, v in graph.edges:
        if v in selected:
            influenced.add(u)
    return len(influenced) / len(graph.nodes)


@dataclass
class MonthlyProfile:
    band: tuple[int, int]  # 1-based inclusive rank range
    probabilities: dict[int, float]  # month 1..12 -> fraction

    @property
    def label(self) -> str:
        return f"{self.band[0]}-{self.band[1]}"


def _month_of(timestamp: int) -> int:
    return time.gmtime(timestamp).tm_mon


def monthly_activity_profile(log: GroupActivityLog, ranking: list[tuple[str, float]],
                             bands: list[tuple[int, int]],
                             event: str = "posts") -> list[MonthlyProfile]:
    """Per rank-band calendar-month activity probabilities.

    ``posts`` counts a user's posts in the post's month; for
    ``reactions_received`` a reaction lands in its own month and in the
    band of the reacted content's author.
    """
    if event not in ("posts", "reactions_received"):
        raise InvalidParams(f"unknown event {event!r}")
    for i, (lo, hi) in enumerate(bands):
        if lo < 1 or hi < lo:
            raise InvalidParams(f"bad band {(lo, hi)}")
        for lo2, hi2 in bands[i + 1 :]:
            if lo <= hi2 and lo2 <= hi:
                raise InvalidParams("bands overlap")

    band_of: dict[str, int] = {}
    for pos, (user, _) in enumerate(ranking, start=1):
        for b, (lo, hi) in enumerate(bands):
            if lo <= pos <= hi:
                band_of[user] = b
                break

    counts = [[0] * 13 for _ in bands]
    if event == "posts":
        for c in log.contents:
            if c.kind == POST and c.author in band_of:
                counts[band_of[c.author]][_month_of(c.timestamp)] += 1
    else:
        for r in log.reactions:
            author = log.content(r.target).author
            if author in band_of and r.reactor != author:
                counts[band_of[author]][_month_of(r.timestamp)] += 1

    profiles = []
    for b, (lo, hi) in enumerate(bands):
        total = sum(counts[b])
        probs = {m: (counts[b][m] / total if total else 0.0) for m in range(1, 13)}
        profiles.append(MonthlyProfile(band=(lo, hi), probabilities=probs))
    return profiles


def best_promotion_window(profiles: list[MonthlyProfile], top_m: int = 3) -> list[int]:
    """Months ranked by band-averaged probability, calendar order on ties."""
    if not profiles:
        raise InvalidParams("no profiles given")
    avg = {
        m: sum(p.probabilities[m] for p in profiles) / len(profiles) for m in range(1, 13)
    }
    ordered = sorted(range(1, 13), key=lambda m: (-avg[m], m))
    return ordered[:top_m]


def extract_popular_topics(log: GroupActivityLog, top_n: int,
                           preprocess=None) -> list[tuple[str, int]]:
    """Most frequent non-stopword unigrams and bigrams across post texts."""
    if preprocess is None:
        preprocess = Preprocessor()
    counts: dict[str, int] = {}
    for c in log.contents:
        if c.kind != POST:
            continue
        tokens = preprocess(c.text)
        for t in tokens:
            counts[t] = counts.get(t, 0) + 1
        for a, b in zip(tokens, tokens[1:]):
            bigram = f"{a} {b}"
            counts[bigram] = counts.get(bigram, 0) + 1
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return ordered[:top_n]
