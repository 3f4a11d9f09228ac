import math
import random

import pytest

from oracles import brute_force_mi_table
from womgraph import relevance
from womgraph.errors import EmptyCorpus, NegativeRelevance


def random_corpus(rng, vocab_size, n_docs):
    vocab = [f"w{i:02d}" for i in range(vocab_size)]
    return [
        rng.sample(vocab, rng.randint(1, min(8, vocab_size))) for _ in range(n_docs)
    ]


def test_empty_corpus_rejected():
    with pytest.raises(EmptyCorpus):
        relevance.build_relatedness_table([[], []])


def test_non_cooccurring_words_absent():
    table = relevance.build_relatedness_table([["a"], ["b"]], min_pair_count=1)
    assert table.score("a", "b") == 0.0


def test_perfect_cooccurrence_hand_value():
    # x and y together in 2 of 4 docs, nowhere else
    corpus = [["x", "y"], ["x", "y"], ["z"], ["z"]]
    table = relevance.build_relatedness_table(corpus, min_pair_count=1)
    expected = 0.5 * math.log(2) + 0.5 * math.log(2)
    assert table.score("x", "y") == pytest.approx(expected, abs=1e-12)


def test_symmetry_random():
    rng = random.Random(7)
    corpus = random_corpus(rng, 20, 60)
    table = relevance.build_relatedness_table(corpus, min_pair_count=1)
    for (x, y), score in table.entries.items():
        assert table.score(x, y) == table.score(y, x) == score


def test_matches_brute_force_oracle():
    rng = random.Random(11)
    for _ in range(10):
        corpus = random_corpus(rng, rng.randint(5, 25), rng.randint(10, 80))
        min_pair = rng.randint(1, 2)
        table = relevance.build_relatedness_table(
            corpus, min_pair_count=min_pair, top_n_per_word=10**6
        )
        oracle = brute_force_mi_table(corpus, min_pair)
        # pairs at MI ~ 0 may fall on either side of the floor; compare values
        for pair in set(table.entries) | set(oracle):
            assert table.entries.get(pair, 0.0) == pytest.approx(
                oracle.get(pair, 0.0), abs=1e-10
            )


def test_self_sim_dominates():
    rng = random.Random(3)
    corpus = random_corpus(rng, 15, 40)
    table = relevance.build_relatedness_table(corpus, min_pair_count=1)
    if table.entries:
        assert table.self_sim >= max(table.entries.values())


def test_top_n_truncation_keeps_symmetry():
    rng = random.Random(5)
    corpus = random_corpus(rng, 30, 80)
    table = relevance.build_relatedness_table(corpus, min_pair_count=1, top_n_per_word=3)
    for word in table.vocab:
        partners = table.partners(word)
        for other, score in partners:
            assert table.score(other, word) == score


def test_related_words():
    corpus = [["a", "b"], ["a", "b"], ["a", "c"], ["a", "c"], ["d"], ["d"], ["d", "e"]]
    table = relevance.build_relatedness_table(corpus, min_pair_count=1)
    assert relevance.related_words(table, "nosuchword", 5) == []
    full = relevance.related_words(table, "a", 100)
    if full:
        assert relevance.related_words(table, "a", 1) == [full[0]]
        scores = [s for _, s in full]
        assert scores == sorted(scores, reverse=True)


def test_related_words_nonincreasing_random():
    rng = random.Random(13)
    corpus = random_corpus(rng, 25, 60)
    table = relevance.build_relatedness_table(corpus, min_pair_count=1)
    for word in sorted(table.vocab):
        naive = sorted(
            ((w, s) for w, s in table.partners(word)), key=lambda ws: (-ws[1], ws[0])
        )
        assert relevance.related_words(table, word, len(naive)) == naive


def test_content_relevance_examples():
    table = relevance.RelatednessTable(
        entries={("databas", "sql"): 0.3}, vocab={"databas", "sql"}, self_sim=0.9
    )
    assert relevance.content_relevance([], {"databas"}, table) == 0.0
    assert relevance.content_relevance(["java"], {"databas"}, table) == 0.0
    assert relevance.content_relevance(["databas"], {"databas"}, table) == 0.9
    # duplicates count per occurrence
    got = relevance.content_relevance(["databas", "sql", "sql"], {"databas"}, table)
    assert got == pytest.approx(0.9 + 2 * 0.3, abs=1e-12)


def test_content_relevance_monotone():
    table = relevance.RelatednessTable(
        entries={("a", "b"): 0.5}, vocab={"a", "b"}, self_sim=1.0
    )
    tokens = ["a", "b", "c"]
    base = relevance.content_relevance(tokens, {"a"}, table)
    for extra in ["a", "b", "c", "zzz"]:
        assert relevance.content_relevance(tokens + [extra], {"a"}, table) >= base


def test_boosted_relevance():
    assert relevance.boosted_relevance(0.0, 20.0) == 1.0
    assert relevance.boosted_relevance(math.e - 1, 20.0) == pytest.approx(21.0, abs=1e-12)
    with pytest.raises(NegativeRelevance):
        relevance.boosted_relevance(-0.1)
    # concave damping: doubling the input less than doubles the boost delta
    b10 = relevance.boosted_relevance(10.0, 20.0) - 1.0
    b20 = relevance.boosted_relevance(20.0, 20.0) - 1.0
    assert b20 / b10 == pytest.approx(math.log(21) / math.log(11), abs=1e-12)
    assert b20 / b10 < 2.0


def test_boost_strictly_increasing():
    prev = relevance.boosted_relevance(0.0)
    for r in [0.1, 0.5, 1.0, 3.0, 10.0, 100.0]:
        cur = relevance.boosted_relevance(r)
        assert cur > prev
        prev = cur


def test_table_save_load_roundtrip(tmp_path):
    rng = random.Random(17)
    corpus = random_corpus(rng, 15, 40)
    table = relevance.build_relatedness_table(corpus, min_pair_count=1)
    path = tmp_path / "table.tsv"
    relevance.save_table(table, path)
    loaded = relevance.load_table(path)
    assert loaded.entries == table.entries
    assert loaded.vocab == table.vocab
    assert loaded.self_sim == table.self_sim


def test_independent_words_mean_mi_vanishes():
    # independent occurrences: stored MI concentrates near zero as N grows
    rng = random.Random(23)
    n_docs = 10_000
    corpus = []
    for _ in range(n_docs):
        doc = [w for w in ("x", "y") if rng.random() < 0.3]
        doc.append("filler")
        corpus.append(doc)
    table = relevance.build_relatedness_table(corpus, min_pair_count=1, top_n_per_word=10**6)
    score = table.score("x", "y")
    # 3 sigma of the MI estimator at this sample size (~chi2/2N scale)
    assert score < 3.0 / n_docs * 5
