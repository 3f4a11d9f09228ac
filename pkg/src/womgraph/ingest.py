"""Parsing, validation and text preprocessing of group activity logs.

The on-disk format is UTF-8 line-delimited JSON, one record per line.
See docs/FORMATS.md for the exact field names. A ``comment`` record
synthesizes two model objects: the comment ContentItem itself and the
implicit ``comment_reaction`` toward its parent post.
"""

import json
import re
from importlib import resources

from .errors import DanglingReference, DuplicateContentId, MalformedRecord
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

_TOKEN_SPLIT = re.compile(r"[^0-9a-z]+")

_REACTION_TYPES = {LIKE, LIKE_ON_COMMENT, SHARE}


def _require(record, line_no, *fields):
    for f in fields:
        if f not in record:
            raise MalformedRecord(line_no, f"missing field {f!r}")
        if record[f] is None or record[f] == "":
            if f != "text":  # empty text is legal
                raise MalformedRecord(line_no, f"empty field {f!r}")
    return [record[f] for f in fields]


def _timestamp(record, line_no):
    ts = record.get("timestamp")
    if ts is None:
        raise MalformedRecord(line_no, "missing field 'timestamp'")
    if not isinstance(ts, (int, float)) or isinstance(ts, bool) or ts < 0:
        raise MalformedRecord(line_no, f"bad timestamp {ts!r}")
    return int(ts)


def parse_activity_log(stream) -> GroupActivityLog:
    """Parse a line-delimited activity log into a validated model.

    ``stream`` is an iterable of lines (an open text file works). Raises
    MalformedRecord, DuplicateContentId or DanglingReference with the
    offending line number.
    """
    users: set[str] = set()
    contents: list[ContentItem] = []
    reactions: list[Reaction] = []
    by_id: dict[str, ContentItem] = {}

    for line_no, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except ValueError as exc:
            raise MalformedRecord(line_no, f"invalid JSON ({exc})") from exc
        if not isinstance(record, dict):
            raise MalformedRecord(line_no, "record is not an object")
        rtype = record.get("type")

        if rtype == "user":
            (uid,) = _require(record, line_no, "id")
            users.add(str(uid))

        elif rtype == "post":
            cid, author, text = _require(record, line_no, "id", "author", "text")
            ts = _timestamp(record, line_no)
            cid, author = str(cid), str(author)
            if cid in by_id:
                raise DuplicateContentId(line_no, cid)
            item = ContentItem(cid, author, POST, str(text), ts)
            by_id[cid] = item
            contents.append(item)
            users.add(author)

        elif rtype == "comment":
            cid, author, parent, text = _require(
                record, line_no, "id", "author", "parent", "text"
            )
            ts = _timestamp(record, line_no)
            cid, author, parent = str(cid), str(author), str(parent)
            if cid in by_id:
                raise DuplicateContentId(line_no, cid)
            target = by_id.get(parent)
            if target is None:
                raise DanglingReference(line_no, parent)
            if target.kind != POST:
                raise MalformedRecord(line_no, f"comment parent {parent!r} is not a post")
            item = ContentItem(cid, author, COMMENT, str(text), ts, parent=parent)
            by_id[cid] = item
            contents.append(item)
            users.add(author)
            # the implicit interaction event toward the parent post
            reactions.append(Reaction(author, parent, COMMENT_REACTION, ts))

        elif rtype in _REACTION_TYPES:
            author, target = _require(record, line_no, "author", "target")
            ts = _timestamp(record, line_no)
            author, target = str(author), str(target)
            item = by_id.get(target)
            if item is None:
                raise DanglingReference(line_no, target)
            if rtype == LIKE_ON_COMMENT:
                if item.kind != COMMENT:
                    raise MalformedRecord(line_no, "like_on_comment must target a comment")
            elif item.kind != POST:
                raise MalformedRecord(line_no, f"{rtype} must target a post")
            reactions.append(Reaction(author, target, rtype, ts))
            users.add(author)

        else:
            raise MalformedRecord(line_no, f"unknown record type {rtype!r}")

    return GroupActivityLog(users=users, contents=contents, reactions=reactions)


def serialize_activity_log(log: GroupActivityLog) -> str:
    """Canonical serialization; parse(serialize(log)) reproduces the log.

    Users come first (sorted), then contents in order, then the explicit
    reactions in order (comment_reactions are implicit in comment records).
    """
    out = []
    for uid in sorted(log.users):
        out.append(json.dumps({"type": "user", "id": uid}, sort_keys=True))
    for c in log.contents:
        rec = {"type": c.kind, "id": c.content_id, "author": c.author,
               "text": c.text, "timestamp": c.timestamp}
        if c.kind == COMMENT:
            rec["parent"] = c.parent
        out.append(json.dumps(rec, sort_keys=True))
    for r in log.reactions:
        if r.kind == COMMENT_REACTION:
            continue
        out.append(json.dumps({"type": r.kind, "author": r.reactor,
                               "target": r.target, "timestamp": r.timestamp},
                              sort_keys=True))
    return "\n".join(out) + ("\n" if out else "")


def load_word_list(path) -> set[str]:
    """One word per line; blank lines and #-comments ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return words


def load_stem_rules(path) -> list[str]:
    """Ordered suffix-strip rules, one suffix per line."""
    rules = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            suffix = line.strip().lower()
            if suffix and not suffix.startswith("#"):
                rules.append(suffix)
    return rules


def default_stopwords() -> set[str]:
    ref = resources.files("womgraph.data") / "stopwords.txt"
    return {w for w in ref.read_text(encoding="utf-8").split() if w}


def default_stem_rules() -> list[str]:
    ref = resources.files("womgraph.data") / "stem_rules.txt"
    return [w for w in ref.read_text(encoding="utf-8").split() if w]


def stem(word: str, stem_rules: list[str]) -> str:
    # first matching rule wins; never strip below two characters
    for suffix in stem_rules:
        if word.endswith(suffix) and len(word) - len(suffix) >= 2:
            return word[: len(word) - len(suffix)]
    return word


def preprocess_text(raw: str, stopwords: set[str], stem_rules: list[str]) -> list[str]:
    """Lowercase, split on non-alphanumerics, drop stopwords, strip suffixes."""
    tokens = []
    for word in _TOKEN_SPLIT.split(raw.lower()):
        if not word or word in stopwords:
            continue
        tokens.append(stem(word, stem_rules))
    return tokens


class Preprocessor:
    """Bundles a stopword set and stem rules into one callable pipeline."""

    def __init__(self, stopwords=None, stem_rules=None):
        self.stopwords = default_stopwords() if stopwords is None else stopwords
        self.stem_rules = default_stem_rules() if stem_rules is None else stem_rules

    def __call__(self, raw: str) -> list[str]:
        return preprocess_text(raw, self.stopwords, self.stem_rules)
