"""Core in-memory model of a group activity log.

User ids are opaque non-empty strings; their lexicographic order is the
tie-breaking order everywhere in the package.
"""

from dataclasses import dataclass, field

POST = "post"
COMMENT = "comment"

LIKE_ON_COMMENT = "like_on_comment"
LIKE = "like"
COMMENT_REACTION = "comment_reaction"
SHARE = "share"

REACTION_KINDS = (LIKE_ON_COMMENT, LIKE, COMMENT_REACTION, SHARE)


@dataclass(frozen=True)
class ContentItem:
    content_id: str
    author: str
    kind: str  # POST or COMMENT
    text: str
    timestamp: int
    parent: str | None = None  # required iff kind == COMMENT


@dataclass(frozen=True)
class Reaction:
    reactor: str
    target: str  # content id; for comment_reaction this is the parent post
    kind: str
    timestamp: int


@dataclass
class GroupActivityLog:
    users: set[str]
    contents: list[ContentItem]
    reactions: list[Reaction]
    _by_id: dict[str, ContentItem] = field(default=None, repr=False, compare=False)

    def content(self, content_id: str) -> ContentItem:
        if self._by_id is None:
            self._by_id = {c.content_id: c for c in self.contents}
        return self._by_id[content_id]

    def posts(self):
        return [c for c in self.contents if c.kind == POST]

    def comments(self):
        return [c for c in self.contents if c.kind == COMMENT]
