"""Corpus-level quote usage statistics.

The quoted-by count of a message is the number of *distinct* messages with a
resolved quote edge to it.  The author superlatives are raw edge counts: a
message quoting two passages of the same source contributes twice.  Both
conventions are fixed here so hand-computed fixtures stay stable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Collection, Mapping

from hybridweave.errors import EmptySelection
from hybridweave.ingest.records import ADMIN_ROLES, Corpus
from hybridweave.quotegraph.blocks import QuoteBlock
from hybridweave.quotegraph.resolve import UNRESOLVED, QuoteEdge

HIST_BUCKETS = ("0", "1", "2-6", "7+")


@dataclass(frozen=True)
class QuoteStats:
    n_messages: int
    n_authors: int
    n_admin_authors: int
    frac_with_quote: float
    quoted_by_hist: dict[str, float]
    most_quoted_author: str  # empty when no resolved edges
    most_quoting_author: str


def bucket_label(count: int) -> str:
    """Histogram bucket for a quoted-by count."""
    if count == 0:
        return "0"
    if count == 1:
        return "1"
    if count <= 6:
        return "2-6"
    return "7+"


def quote_statistics(
    corpus: Corpus,
    blocks_by_message: Mapping[str, list[QuoteBlock]],
    quote_edges: list[QuoteEdge],
    include: Collection[str] | None = None,
) -> QuoteStats:
    """Quote statistics over the selected messages.

    ``include`` restricts the selection to the given message ids (None means
    the whole corpus); resolved edges count only when both endpoints are
    selected.  Raises EmptySelection when nothing matches.
    """
    selected = [
        m for m in corpus.messages if include is None or m.message_id in include
    ]
    if not selected:
        raise EmptySelection("message filter matched no messages")
    selected_ids = {m.message_id for m in selected}
    author_of = {m.message_id: m.author for m in selected}

    n = len(selected)
    authors = {m.author for m in selected}
    admin_authors = {
        m.author
        for m in selected
        if corpus.actants.get(m.author) is not None
        and corpus.actants[m.author].role in ADMIN_ROLES
    }

    with_quote = sum(1 for m in selected if blocks_by_message.get(m.message_id))

    citers: dict[str, set[str]] = {m.message_id: set() for m in selected}
    received: Counter[str] = Counter()
    emitted: Counter[str] = Counter()
    for e in quote_edges:
        if e.resolution == UNRESOLVED or not e.cited:
            continue
        if e.citing not in selected_ids or e.cited not in selected_ids:
            continue
        citers[e.cited].add(e.citing)
        received[author_of[e.cited]] += 1
        emitted[author_of[e.citing]] += 1

    hist_counts = Counter(bucket_label(len(c)) for c in citers.values())
    hist = {bucket: hist_counts.get(bucket, 0) / n for bucket in HIST_BUCKETS}

    def top(counter: Counter[str]) -> str:
        if not counter:
            return ""
        best = max(counter.values())
        return min(a for a, c in counter.items() if c == best)

    return QuoteStats(
        n_messages=n,
        n_authors=len(authors),
        n_admin_authors=len(admin_authors),
        frac_with_quote=with_quote / n,
        quoted_by_hist=hist,
        most_quoted_author=top(received),
        most_quoting_author=top(emitted),
    )
