"""Word relatedness from document co-occurrence plus content boost scoring.

Relatedness between two words is the mutual information of their binary
document-presence indicators, estimated over a corpus and summed over the
full 2x2 presence/absence table. Content scores add up the relatedness of
every (topic word, content token) pair, then get a logarithmic boost that
rewards topical content without letting keyword spam run away.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import EmptyCorpus, NegativeRelevance

DEFAULT_ALPHA = 20.0
DEFAULT_MIN_PAIR_COUNT = 2
DEFAULT_TOP_N_PER_WORD = 50


@dataclass
class RelatednessTable:
    entries: dict[tuple[str, str], float]  # keyed by (min(x,y), max(x,y))
    vocab: set[str]
    self_sim: float
    _partners: dict[str, list[tuple[str, float]]] = field(
        default=None, repr=False, compare=False
    )

    def score(self, x: str, y: str) -> float:
        if x == y:
            return self.self_sim
        return self.entries.get((x, y) if x < y else (y, x), 0.0)

    def partners(self, word: str) -> list[tuple[str, float]]:
        """All stored partners of ``word``, by score desc then word asc."""
        if self._partners is None:
            index: dict[str, list[tuple[str, float]]] = {}
            for (x, y), score in self.entries.items():
                index.setdefault(x, []).append((y, score))
                index.setdefault(y, []).append((x, score))
            for lst in index.values():
                lst.sort(key=lambda ws: (-ws[1], ws[0]))
            self._partners = index
        return self._partners.get(word, [])


def _pair_mi(n_docs, df_x, df_y, df_xy):
    """MI of two binary presence indicators, from document frequencies."""
    n = float(n_docs)
    cells = [
        (df_xy, df_x, df_y),                              # (present, present)
        (df_x - df_xy, df_x, n_docs - df_y),              # (present, absent)
        (df_y - df_xy, n_docs - df_x, df_y),              # (absent, present)
        (n_docs - df_x - df_y + df_xy, n_docs - df_x, n_docs - df_y),
    ]
    total = 0.0
    for joint, ma, mb in cells:
        if joint > 0:
            p = joint / n
            total += p * math.log(p * n * n / (ma * mb))
    return max(total, 0.0)


def build_relatedness_table(
    corpus: list[list[str]],
    min_pair_count: int = DEFAULT_MIN_PAIR_COUNT,
    top_n_per_word: int = DEFAULT_TOP_N_PER_WORD,
) -> RelatednessTable:
    """Build the relatedness table from tokenized documents.

    Pairs co-occurring in fewer than ``min_pair_count`` documents are
    dropped; each word keeps only its ``top_n_per_word`` best partners
    (a pair survives if either endpoint keeps it, preserving symmetry).
    """
    docs = [set(doc) for doc in corpus if doc]
    if not docs:
        raise EmptyCorpus("corpus has no nonempty document")
    n_docs = len(docs)

    df: dict[str, int] = {}
    pair_df: dict[tuple[str, str], int] = {}
    for doc in docs:
        for w in doc:
            df[w] = df.get(w, 0) + 1
        for pair in combinations(sorted(doc), 2):
            pair_df[pair] = pair_df.get(pair, 0) + 1

    scored: dict[tuple[str, str], float] = {}
    for (x, y), df_xy in pair_df.items():
        if df_xy < min_pair_count:
            continue
        mi = _pair_mi(n_docs, df[x], df[y], df_xy)
        if mi > 0.0:
            scored[(x, y)] = mi

    # per-word truncation to the strongest partners
    best: dict[str, list[tuple[float, str, tuple[str, str]]]] = {}
    for pair, mi in scored.items():
        x, y = pair
        best.setdefault(x, []).append((-mi, y, pair))
        best.setdefault(y, []).append((-mi, x, pair))
    keep: set[tuple[str, str]] = set()
    for lst in best.values():
        lst.sort()
        keep.update(pair for _, _, pair in lst[:top_n_per_word])
    entries = {pair: scored[pair] for pair in keep}

    self_sim = max(entries.values()) if entries else 1.0
    return RelatednessTable(entries=entries, vocab=set(df), self_sim=self_sim)


def related_words(table: RelatednessTable, seed: str, limit: int) -> list[tuple[str, float]]:
    """Strongest partners of ``seed``; unknown seeds yield an empty list."""
    return table.partners(seed)[:limit]


def content_relevance(tokens: list[str], topic_words, table: RelatednessTable) -> float:
    """Summed relatedness of every (topic word, token) pair.

    Duplicate tokens contribute once per occurrence. Topic words are
    visited in sorted order so the floating sum is reproducible.
    """
    total = 0.0
    for t in sorted(set(topic_words)):
        for p in tokens:
            if t == p:
                total += table.self_sim
            else:
                total += table.entries.get((t, p) if t < p else (p, t), 0.0)
    return total


def boosted_relevance(relevance: float, alpha: float = DEFAULT_ALPHA) -> float:
    """Log-damped boost: 1 + alpha * ln(1 + relevance)."""
    if relevance < 0:
        raise NegativeRelevance(f"relevance must be >= 0, got {relevance}")
    return 1.0 + alpha * math.log1p(relevance)


def save_table(table: RelatednessTable, path) -> None:
    """Tab-separated word/word/score, sorted, for golden-file diffing."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#self_sim\t{table.self_sim!r}\n")
        for word in sorted(table.vocab):
            fh.write(f"#vocab\t{word}\n")
        for (x, y) in sorted(table.entries):
            fh.write(f"{x}\t{y}\t{table.entries[(x, y)]!r}\n")


def load_table(path) -> RelatednessTable:
    entries = {}
    vocab = set()
    self_sim = 1.0
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if parts[0] == "#self_sim":
                self_sim = float(parts[1])
            elif parts[0] == "#vocab":
                vocab.add(parts[1])
            else:
                x, y, score = parts
                entries[(x, y)] = float(score)
                vocab.update((x, y))
    return RelatednessTable(entries=entries, vocab=vocab, self_sim=self_sim)


def empty_table() -> RelatednessTable:
    """A table with no pairs; exact topic matches still score self_sim=1."""
    return RelatednessTable(entries={}, vocab=set(), self_sim=1.0)
