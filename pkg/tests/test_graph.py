import random

import pytest

from oracles import random_graph
from womgraph import graph as G
from womgraph import ingest, relevance
from womgraph.errors import UnsupportedFormat
from womgraph.model import GroupActivityLog, ContentItem, Reaction, POST, COMMENT
from womgraph.model import COMMENT_REACTION, LIKE, LIKE_ON_COMMENT, SHARE


def small_log():
    contents = [
        ContentItem("p1", "u1", POST, "offtopic words here", 10),
        ContentItem("c1", "u2", COMMENT, "plain reply", 20, parent="p1"),
        ContentItem("c2", "u2", COMMENT, "another reply", 30, parent="p1"),
    ]
    reactions = [
        Reaction("u2", "p1", COMMENT_REACTION, 20),
        Reaction("u2", "p1", COMMENT_REACTION, 30),
        Reaction("u3", "c1", LIKE_ON_COMMENT, 40),
    ]
    return GroupActivityLog({"u1", "u2", "u3", "idle"}, contents, reactions)


def test_single_like_irrelevant_post():
    log = GroupActivityLog(
        {"u1", "u2"},
        [ContentItem("p1", "u1", POST, "nothing topical", 1)],
        [Reaction("u2", "p1", LIKE, 2)],
    )
    g = G.build_interaction_graph(log, ["databas"], relevance.empty_table())
    assert g.edges == {("u2", "u1"): 2.0}


def test_self_loop_dropped():
    log = GroupActivityLog(
        {"u1"},
        [ContentItem("p1", "u1", POST, "x", 1)],
        [Reaction("u1", "p1", LIKE, 2)],
    )
    g = G.build_interaction_graph(log, [], relevance.empty_table())
    assert g.edges == {}
    assert g.nodes == {"u1"}


def test_comment_weights_hand_trace():
    g = G.build_interaction_graph(small_log(), ["unrelatedtopic"], relevance.empty_table())
    # two comment reactions at weight 4 x post boost 1; one like-on-comment
    # at weight 1 x comment boost 1
    assert g.edges[("u2", "u1")] == pytest.approx(8.0)
    assert g.edges[("u3", "u2")] == pytest.approx(1.0)
    assert "idle" in g.nodes


def test_isolated_users_kept():
    g = G.build_interaction_graph(small_log(), [], relevance.empty_table())
    assert g.nodes == {"u1", "u2", "u3", "idle"}


def test_total_weight_matches_direct_fold():
    log = small_log()
    table = relevance.RelatednessTable(
        entries={("repli", "plain"): 0.4}, vocab={"repli", "plain"}, self_sim=1.0
    )
    topic = ["repli"]
    pre = ingest.Preprocessor()
    weights = G.ReactionWeights()
    g = G.build_interaction_graph(log, topic, table, weights, alpha=20.0, preprocess=pre)
    expected = 0.0
    for r in log.reactions:
        target = log.content(r.target)
        if target.author == r.reactor:
            continue
        rel = relevance.content_relevance(pre(target.text), topic, table)
        expected += weights.of(r.kind) * relevance.boosted_relevance(rel, 20.0)
    assert g.total_weight() == pytest.approx(expected, rel=1e-12)


def test_alpha_zero_gives_base_weights():
    table = relevance.RelatednessTable(
        entries={("repli", "plain"): 0.4}, vocab=set(), self_sim=1.0
    )
    g = G.build_interaction_graph(small_log(), ["repli"], table, alpha=0.0)
    assert g.edges[("u2", "u1")] == pytest.approx(8.0)
    assert g.edges[("u3", "u2")] == pytest.approx(1.0)


def test_order_independent_build():
    log = small_log()
    extra = [
        Reaction("u3", "p1", SHARE, 50),
        Reaction("u3", "p1", LIKE, 60),
        Reaction("u2", "c1", LIKE_ON_COMMENT, 70),
    ]
    log = GroupActivityLog(log.users, log.contents, log.reactions + extra)
    table = relevance.RelatednessTable(
        entries={("word", "repli"): 0.2}, vocab={"word", "repli"}, self_sim=1.5
    )
    g1 = G.build_interaction_graph(log, ["word"], table)
    rng = random.Random(4)
    for _ in range(5):
        shuffled = list(log.reactions)
        rng.shuffle(shuffled)
        log2 = GroupActivityLog(log.users, log.contents, shuffled)
        g2 = G.build_interaction_graph(log2, ["word"], table)
        assert g2.edges == g1.edges


def test_worker_count_does_not_change_graph():
    log = small_log()
    table = relevance.empty_table()
    g1 = G.build_interaction_graph(log, ["repli"], table, workers=1)
    for workers in (2, 3, 8):
        gw = G.build_interaction_graph(log, ["repli"], table, workers=workers)
        assert gw.edges == g1.edges


def test_degree_distribution_isolated():
    g = G.InteractionGraph(nodes={"a"}, edges={})
    hist = G.degree_distribution(g, "total")
    assert hist.buckets == {0: 1}
    assert hist.ccdf == {0: 1.0}


def test_degree_distribution_cycle():
    nodes = {"a", "b", "c", "d"}
    edges = {("a", "b"): 1.0, ("b", "c"): 1.0, ("c", "d"): 1.0, ("d", "a"): 1.0}
    g = G.InteractionGraph(nodes=nodes, edges=edges)
    hist = G.degree_distribution(g, "in")
    assert hist.buckets == {1: 4}


def test_ccdf_nonincreasing_and_counts_sum():
    rng = random.Random(9)
    g = random_graph(rng, 30, 0.1)
    for mode in ("in", "out", "total"):
        hist = G.degree_distribution(g, mode)
        assert sum(hist.buckets.values()) == len(g.nodes)
        values = [hist.ccdf[d] for d in sorted(hist.ccdf)]
        assert all(a >= b for a, b in zip(values, values[1:]))


def test_export_empty():
    g = G.InteractionGraph(nodes=set(), edges={})
    text = G.export_graph(g, "edge-list")
    assert "# nodes: 0" in text


def test_export_single_edge():
    g = G.InteractionGraph(nodes={"a", "b"}, edges={("a", "b"): 2.5})
    text = G.export_graph(g, "edge-list")
    edge_lines = [l for l in text.splitlines() if not l.startswith(("#", "node"))]
    assert edge_lines == ["a\tb\t2.5"]


def test_export_import_roundtrip():
    rng = random.Random(21)
    g = random_graph(rng, 100, 0.05)
    back = G.import_graph(G.export_graph(g, "edge-list"))
    assert back.nodes == g.nodes
    assert back.edges == g.edges


def test_export_dot_and_bad_format():
    g = G.InteractionGraph(nodes={"a", "b"}, edges={("a", "b"): 1.0})
    assert G.export_graph(g, "dot").startswith("digraph")
    with pytest.raises(UnsupportedFormat):
        G.export_graph(g, "gexf")
