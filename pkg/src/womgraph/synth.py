"""Deterministic synthetic activity-log generator.

Calibrated to the qualitative shape of real question-answer groups: a
small author pool produces most content, reactions attach preferentially
to already-popular posts, most members only react, and activity follows
a configurable monthly seasonality.
"""

import calendar
from dataclasses import dataclass, field

from random import Random

from .errors import InvalidParams
from .model import (
    COMMENT,
    COMMENT_REACTION,
    LIKE,
    LIKE_ON_COMMENT,
    POST,
    SHARE,
    ContentItem,
    GroupActivityLog,
    Reaction,
)

DEFAULT_VOCAB = [
    "java", "python", "code", "error", "class", "object", "method", "thread",
    "string", "array", "loop", "compile", "debug", "server", "client", "file",
    "test", "build", "print", "value", "input", "output", "list", "stack",
]


@dataclass(frozen=True)
class SynthesisParams:
    n_users: int = 200
    n_posts: int = 100
    n_comments: int = 50
    n_reactions: int = 800
    poster_frac: float = 0.065      # small author pool generates the content
    pa_strength: float = 0.5        # probability of copying an earlier target
    zipf_exponent: float = 0.5      # author productivity decay; sets the degree tail
    react_only_bias: float = 6.0    # odds of drawing a react-only reactor
    topical_frac: float = 0.3       # fraction of texts carrying topic words
    topic_words: tuple = ("database", "sql", "query")
    vocab: tuple = tuple(DEFAULT_VOCAB)
    seasonality: tuple = field(default=tuple([1 / 12.0] * 12))
    years: tuple = (2011, 2015)
    seed: int = 0

    def __post_init__(self):
        if self.n_users < 2:
            raise InvalidParams("n_users must be >= 2")
        if self.n_posts < 1 or self.n_comments < 0 or self.n_reactions < 0:
            raise InvalidParams("content counts must be non-negative (posts >= 1)")
        if not 0.0 < self.poster_frac <= 1.0:
            raise InvalidParams("poster_frac must be in (0, 1]")
        if not 0.0 <= self.pa_strength < 1.0:
            raise InvalidParams("pa_strength must be in [0, 1)")
        if self.react_only_bias < 0:
            raise InvalidParams("react_only_bias must be >= 0")
        if self.zipf_exponent <= 0:
            raise InvalidParams("zipf_exponent must be positive")
        if len(self.seasonality) != 12:
            raise InvalidParams("seasonality needs 12 monthly weights")
        if abs(sum(self.seasonality) - 1.0) > 1e-9:
            raise InvalidParams("seasonality weights must sum to 1")
        if any(w < 0 for w in self.seasonality):
            raise InvalidParams("seasonality weights must be non-negative")


def _timestamp(rng: Random, params: SynthesisParams) -> int:
    year = rng.randint(params.years[0], params.years[1])
    month = rng.choices(range(1, 13), weights=params.seasonality)[0]
    day = rng.randint(1, 28)
    return calendar.timegm((year, month, day, rng.randint(0, 23), rng.randint(0, 59), 0))


def _text(rng: Random, params: SynthesisParams) -> str:
    words = rng.choices(params.vocab, k=rng.randint(3, 8))
    if rng.random() < params.topical_frac:
        words += rng.choices(params.topic_words, k=rng.randint(1, 3))
        rng.shuffle(words)
    return " ".join(words)


def synth_generate(params: SynthesisParams) -> GroupActivityLog:
    """Generate a log; the same seed always yields the identical log."""
    rng = Random(params.seed)
    users = [f"u{i:05d}" for i in range(params.n_users)]
    n_posters = max(2, int(round(params.poster_frac * params.n_users)))
    posters = users[:n_posters]
    reactors_pool = users[n_posters:] or users
    # zipf-like productivity inside the author pool
    poster_weights = [1.0 / (i + 1) ** params.zipf_exponent for i in range(n_posters)]

    contents: list[ContentItem] = []
    reactions: list[Reaction] = []

    posts = []
    for i in range(params.n_posts):
        author = rng.choices(posters, weights=poster_weights)[0]
        post = ContentItem(f"p{i:05d}", author, POST, _text(rng, params), _timestamp(rng, params))
        contents.append(post)
        posts.append(post)

    def pick_reactor():
        odds = params.react_only_bias
        if rng.random() < odds / (1.0 + odds):
            return rng.choice(reactors_pool)
        return rng.choices(posters, weights=poster_weights)[0]

    # preferential attachment: copy an earlier target with prob pa_strength
    target_history = [p.content_id for p in posts]
    by_id = {p.content_id: p for p in posts}

    def pick_post():
        if target_history and rng.random() < params.pa_strength:
            cid = rng.choice(target_history)
        else:
            cid = rng.choice(posts).content_id
        target_history.append(cid)
        return by_id[cid]

    comments = []
    for i in range(params.n_comments):
        parent = pick_post()
        author = pick_reactor()
        if author == parent.author:
            author = pick_reactor()
        ts = _timestamp(rng, params)
        comment = ContentItem(f"c{i:05d}", author, COMMENT, _text(rng, params), ts,
                              parent=parent.content_id)
        contents.append(comment)
        comments.append(comment)
        reactions.append(Reaction(author, parent.content_id, COMMENT_REACTION, ts))

    for _ in range(params.n_reactions):
        roll = rng.random()
        if comments and roll < 0.15:
            target = rng.choice(comments)
            kind = LIKE_ON_COMMENT
        else:
            target = pick_post()
            kind = SHARE if roll > 0.85 else LIKE
        reactor = pick_reactor()
        if reactor == target.author:
            reactor = pick_reactor()
        if reactor == target.author:
            continue
        reactions.append(Reaction(reactor, target.content_id, kind, _timestamp(rng, params)))

    return GroupActivityLog(users=set(users), contents=contents, reactions=reactions)
