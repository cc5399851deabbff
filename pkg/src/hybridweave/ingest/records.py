"""Canonical corpus records produced by the ingestion layer.

A finished :class:`Corpus` is treated as immutable: every downstream stage
only reads it, so it is safe to share across concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PERSON = "person"
ARTIFACT = "artifact"

ROLES = ("leader", "administrator", "developer", "champion", "unknown")

#: Roles that count as "administrator" in two-way admin/developer splits.
ADMIN_ROLES = ("leader", "administrator")


@dataclass(frozen=True)
class Message:
    """One archived email message."""

    message_id: str
    author_raw: str
    sent_at: int  # UTC seconds
    subject: str
    in_reply_to: str | None
    references: tuple[str, ...]
    body: tuple[str, ...]
    source_list: str
    author: str = ""  # actant id, filled by resolve_identities
    date_malformed: bool = False

    def sort_key(self) -> tuple[int, str]:
        return (self.sent_at, self.message_id)


@dataclass(frozen=True)
class CommitRecord:
    """One version-control revision event."""

    file_path: str
    revision: str
    author_raw: str
    committed_at: int  # UTC seconds
    lines_added: int
    lines_removed: int
    log_message: str
    author: str = ""  # actant id, filled by resolve_identities

    def sort_key(self) -> tuple[int, str, str]:
        return (self.committed_at, self.file_path, self.revision)


@dataclass(frozen=True)
class Actant:
    """A node of the hybrid network: a person or a code artifact."""

    id: str
    kind: str  # "person" | "artifact"
    label: str
    aliases: tuple[str, ...] = ()  # persons only, sorted raw address/user forms
    role: str = "unknown"  # persons only
    path: str = ""  # artifacts only
    grouping: str = ""  # artifacts only: "file" | "directory" | "project"


@dataclass
class Corpus:
    """Identity-resolved message and commit archive.

    ``messages`` is sorted by (sent_at, message_id) and ``commits`` by
    (committed_at, file_path, revision); both orders are total and define
    "earlier" everywhere else in the toolkit.
    """

    messages: tuple[Message, ...]
    commits: tuple[CommitRecord, ...]
    actants: dict[str, Actant]
    roles_source: str = ""

    _order: dict[str, int] = field(init=False, repr=False, compare=False)
    _by_id: dict[str, Message] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._order = {m.message_id: i for i, m in enumerate(self.messages)}
        self._by_id = {m.message_id: m for m in self.messages}

    def message(self, message_id: str) -> Message | None:
        return self._by_id.get(message_id)

    def order(self, message_id: str) -> int:
        """Position of a message in the corpus total order."""
        return self._order[message_id]

    def persons(self) -> list[Actant]:
        return [a for a in self.actants.values() if a.kind == PERSON]
