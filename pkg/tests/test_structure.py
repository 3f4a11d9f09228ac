import random

from oracles import brute_bowtie, brute_wcc, random_graph
from womgraph import structure
from womgraph.graph import InteractionGraph


def graph_of(nodes, edges):
    return InteractionGraph(nodes=set(nodes), edges={e: 1.0 for e in edges})


def assert_partition(decomp, nodes):
    classes = decomp.classes()
    union = set()
    total = 0
    for members in classes.values():
        union |= members
        total += len(members)
    assert union == nodes
    assert total == len(nodes)
    fracs = decomp.fractions()
    assert abs(sum(fracs.values()) - 1.0) < 1e-12


def test_single_scc_all_core():
    g = graph_of("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    d = structure.bowtie_decompose(g)
    assert d.core == {"a", "b", "c"}
    assert_partition(d, g.nodes)
    for name, members in d.classes().items():
        if name != "core":
            assert members == set()


def test_isolated_plus_cycle():
    g = graph_of("abcx", [("a", "b"), ("b", "c"), ("c", "a")])
    d = structure.bowtie_decompose(g)
    assert d.core == {"a", "b", "c"}
    assert d.disconnected == {"x"}


def test_seven_node_textbook_layout():
    edges = [
        ("a", "b"), ("b", "c"), ("c", "a"),  # core cycle
        ("p", "a"),                           # in
        ("a", "q"),                           # out
        ("t", "q"),                           # tendril: only reaches out
        ("p", "u"), ("u", "q"),               # tube through u
    ]
    g = graph_of("abcpqtu", edges)
    d = structure.bowtie_decompose(g)
    assert d.core == {"a", "b", "c"}
    assert d.in_ == {"p"}
    assert d.out == {"q"}
    assert d.tubes == {"u"}
    assert d.tendrils == {"t"}
    assert d.disconnected == set()
    assert d.classes() == brute_bowtie(g)


def test_bowtie_matches_closure_oracle():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.05, 0.15, 0.3]))
        d = structure.bowtie_decompose(g)
        assert_partition(d, g.nodes)
        assert d.classes() == brute_bowtie(g)


def test_bowtie_edgeless():
    g = graph_of("abc", [])
    d = structure.bowtie_decompose(g)
    assert_partition(d, g.nodes)
    # every singleton is an SCC; the smallest id wins the core tie
    assert d.core == {"a"}
    assert d.disconnected == {"b", "c"}


def test_scc_tarjan_basic():
    g = graph_of("abcdef", [("a", "b"), ("b", "a"), ("c", "d"), ("d", "e"), ("e", "c")])
    sccs = structure.strongly_connected_components(g)
    as_sets = sorted(map(sorted, sccs))
    assert ["a", "b"] in as_sets
    assert ["c", "d", "e"] in as_sets
    assert ["f"] in as_sets


def test_wcc_two_disjoint_edges():
    g = graph_of("abcd", [("a", "b"), ("c", "d")])
    groups = structure.weakly_connected_components(g)
    assert [g.size for g in groups] == [2, 2]
    assert groups[0].members == {"a", "b"}


def test_wcc_directed_path_single_component():
    g = graph_of("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    groups = structure.weakly_connected_components(g)
    assert len(groups) == 1
    assert groups[0].members == g.nodes


def test_wcc_matches_union_find_oracle():
    rng = random.Random(37)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 200), 0.01)
        got = [grp.members for grp in structure.weakly_connected_components(g)]
        assert got == brute_wcc(g)


def test_wcc_invariant_under_reversal():
    rng = random.Random(41)
    g = random_graph(rng, 50, 0.04)
    reversed_g = InteractionGraph(
        nodes=set(g.nodes), edges={(v, u): w for (u, v), w in g.edges.items()}
    )
    got = [grp.members for grp in structure.weakly_connected_components(g)]
    rev = [grp.members for grp in structure.weakly_connected_components(reversed_g)]
    assert got == rev
