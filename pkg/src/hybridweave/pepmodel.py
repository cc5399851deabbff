"""PEP documents and the enhancement-proposal workflow state machine.

A proposal starts as a pre-PEP, becomes a Draft when the editor assigns it
a number, and from Draft moves to Accepted, Rejected, or Deferred.  An
accepted PEP is marked Final once the reference implementation lands, and
a Final PEP can only ever be Replaced by a newer document.  Two arcs are
extensions beyond the published diagram and are disabled in strict mode:
Accepted -> Rejected (withdrawal of a provisional acceptance) and
Deferred -> Draft (revisiting a shelved proposal).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from datetime import datetime, timezone

from hybridweave.errors import IllegalTransition, NonMonotoneTime
from hybridweave.ingest.dates import parse_archive_date
from hybridweave.ingest.identity import canonical_key
from hybridweave.ingest.records import ADMIN_ROLES, Corpus
from hybridweave.quotegraph.threads import ThreadGraph, build_reply_graph

PREPEP = "PrePep"
DRAFT = "Draft"
ACCEPTED = "Accepted"
FINAL = "Final"
REPLACED = "Replaced"
REJECTED = "Rejected"
DEFERRED = "Deferred"

STATUSES = (PREPEP, DRAFT, ACCEPTED, FINAL, REPLACED, REJECTED, DEFERRED)

# Workflow arcs between distinct statuses.  Self transitions are always
# legal no-ops and are handled in validate_transition directly.
_ARCS = frozenset(
    {
        (PREPEP, DRAFT),
        (DRAFT, ACCEPTED),
        (DRAFT, REJECTED),
        (DRAFT, DEFERRED),
        (DEFERRED, DRAFT),
        (ACCEPTED, FINAL),
        (ACCEPTED, REJECTED),
        (FINAL, REPLACED),
    }
)

_EXTENSION_ARCS = frozenset({(ACCEPTED, REJECTED), (DEFERRED, DRAFT)})


def validate_transition(src: str, dst: str, strict: bool = False) -> bool:
    """True when the workflow allows moving from src to dst."""
    if src not in STATUSES or dst not in STATUSES:
        raise ValueError(f"unknown status in transition {src!r} -> {dst!r}")
    if src == dst:
        return True
    if strict and (src, dst) in _EXTENSION_ARCS:
        return False
    return (src, dst) in _ARCS


@dataclass(frozen=True)
class PepDocument:
    """One enhancement proposal with its full status history.

    status_history holds (status, UTC timestamp, source text) triples in
    event order; status always equals the last entry.
    """

    number: int
    title: str
    champion: str
    status: str
    status_history: tuple[tuple[str, int, str], ...]

    def __post_init__(self) -> None:
        if self.number <= 0:
            raise ValueError(f"PEP number must be positive, got {self.number}")
        if not self.status_history:
            raise ValueError("status_history must hold at least one entry")
        if self.status != self.status_history[-1][0]:
            raise ValueError("status must equal the last history entry")
        previous = None
        for entry_status, entry_at, _ in self.status_history:
            if entry_status not in STATUSES:
                raise ValueError(f"unknown status {entry_status!r} in history")
            if previous is not None:
                if not validate_transition(previous[0], entry_status):
                    raise ValueError(
                        f"illegal history step {previous[0]} -> {entry_status}"
                    )
                if entry_at < previous[1]:
                    raise ValueError("history timestamps must not decrease")
            previous = (entry_status, entry_at)


def apply_status_event(
    pep: PepDocument, to: str, at: int, source: str, strict: bool = False
) -> PepDocument:
    """Return a new document with the status event appended.

    Raises IllegalTransition when the workflow forbids the move and
    NonMonotoneTime when the event predates the last recorded one.
    """
    if to not in STATUSES:
        raise IllegalTransition(f"PEP {pep.number}: unknown status {to!r}")
    if not validate_transition(pep.status, to, strict=strict):
        raise IllegalTransition(f"PEP {pep.number}: {pep.status} -> {to}")
    last_at = pep.status_history[-1][1]
    if at < last_at:
        raise NonMonotoneTime(
            f"PEP {pep.number}: event at {at} predates history end {last_at}"
        )
    history = pep.status_history + ((to, at, source),)
    return replace(pep, status=to, status_history=history)


def token_pattern(pep_number: int) -> re.Pattern[str]:
    """Subject pattern for one PEP: "PEP 279", "PEP-279", "PEP279", any
    case, optional zero padding; the trailing boundary keeps 279 from
    matching 2790."""
    return re.compile(rf"\bpep[\s_-]*0*{pep_number}\b", re.IGNORECASE)


def link_discussion(
    corpus: Corpus, pep_number: int, reply_graph: ThreadGraph | None = None
) -> set[str]:
    """Message ids discussing the PEP: subject token hits plus their
    reply-graph descendants (the closure keeps "Re:" follow-ups whose
    subjects dropped the token)."""
    pattern = token_pattern(pep_number)
    seeds = {m.message_id for m in corpus.messages if pattern.search(m.subject)}
    if not seeds:
        return set()
    if reply_graph is None:
        reply_graph = build_reply_graph(corpus)
    children: dict[str, list[str]] = {}
    for child, parent in sorted(reply_graph.reply_edges):
        children.setdefault(parent, []).append(child)
    linked = set(seeds)
    stack = sorted(seeds)
    while stack:
        mid = stack.pop()
        for child in children.get(mid, ()):
            if child not in linked:
                linked.add(child)
                stack.append(child)
    return linked


def discussion_summary(
    corpus: Corpus, pep_number: int, reply_graph: ThreadGraph | None = None
) -> dict:
    """Replication counts for one PEP discussion: message and author
    totals, admin-author total, and the covered time span."""
    linked = link_discussion(corpus, pep_number, reply_graph)
    messages = sorted((corpus.message(mid) for mid in linked), key=lambda m: m.sort_key())
    authors = sorted({m.author for m in messages})
    admin_authors = [
        a
        for a in authors
        if a in corpus.actants and corpus.actants[a].role in ADMIN_ROLES
    ]
    return {
        "pep": pep_number,
        "messages": len(messages),
        "authors": len(authors),
        "admin_authors": len(admin_authors),
        "first_at": messages[0].sent_at if messages else None,
        "last_at": messages[-1].sent_at if messages else None,
    }


_STATUS_WORDS = {s.lower(): s for s in STATUSES}
_STATUS_WORDS["pre-pep"] = PREPEP

_CREATED_FORMATS = ("%d-%b-%Y", "%Y-%m-%d")


def parse_pep_file(text: str, alias_table: dict[str, str] | None = None) -> PepDocument:
    """Build a PepDocument from the header block of a PEP text file.

    Recognized headers: "PEP:", "Title:", "Author:", "Status:", and an
    optional "Created:" date that timestamps the single initial history
    entry.  The champion is the Author identity run through the same
    canonicalization as message authors.
    """
    headers: dict[str, str] = {}
    for line in text.splitlines():
        if not line.strip():
            break
        match = re.match(r"^([A-Za-z-]+)\s*:\s*(.*)$", line)
        if match:
            headers[match.group(1).lower()] = match.group(2).strip()
    for required in ("pep", "title", "author", "status"):
        if required not in headers:
            raise ValueError(f"PEP file missing {required!r} header")
    number = int(headers["pep"])
    status_word = headers["status"].lower()
    if status_word not in _STATUS_WORDS:
        raise ValueError(f"unknown PEP status {headers['status']!r}")
    status = _STATUS_WORDS[status_word]
    key = canonical_key(headers["author"])
    aliases = alias_table or {}
    champion = aliases.get(key, "p:" + key)
    created = 0
    if headers.get("created"):
        for fmt in _CREATED_FORMATS:
            try:
                parsed = datetime.strptime(headers["created"], fmt)
                created = int(parsed.replace(tzinfo=timezone.utc).timestamp())
                break
            except ValueError:
                continue
        else:
            fallback = parse_archive_date(headers["created"])
            if fallback is not None:
                created = fallback
    return PepDocument(
        number=number,
        title=headers["title"],
        champion=champion,
        status=status,
        status_history=((status, created, "header"),),
    )
