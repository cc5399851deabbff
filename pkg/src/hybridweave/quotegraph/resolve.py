"""Resolve quote blocks to the earlier messages they cite.

Matching happens on normalized text: quote prefixes stripped per line, lines
joined, whitespace runs collapsed to single spaces, case preserved.  A block
qualifies for matching when its normalized text has at least
``min_match_chars`` characters or the block spans two or more lines; shorter
one-liners produce too many spurious matches.

Candidates are strictly-earlier messages (corpus order) whose normalized
body contains the block text.  The In-Reply-To parent wins when it is among
the candidates; otherwise the latest candidate does.  Every block yields
exactly one edge; blocks with no qualifying source stay in the result as
``unresolved`` so that quote *detection* statistics are unaffected by
resolution failures.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from hybridweave.ingest.records import Corpus
from hybridweave.quotegraph.blocks import QuoteBlock, quote_depth

_WS = re.compile(r"\s+")

EXACT = "exact"
VIA_REPLY_HEADER = "via_reply_header"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class QuoteEdge:
    """A citation from a later message to an earlier one."""

    citing: str
    cited: str  # empty when unresolved
    block_index: int
    match_chars: int
    resolution: str  # "exact" | "via_reply_header" | "unresolved"


def normalize_quoted_text(lines: Iterable[str]) -> str:
    """Collapse a sequence of (possibly quoted) lines for substring matching."""
    stripped = [quote_depth(line)[1] for line in lines]
    return _WS.sub(" ", " ".join(stripped)).strip()


def resolve_quote_sources(
    corpus: Corpus,
    blocks_by_message: Mapping[str, list[QuoteBlock]],
    min_match_chars: int = 40,
) -> list[QuoteEdge]:
    """Resolve every quote block of the corpus to its source message.

    Returns one QuoteEdge per block, ordered by (citing message id,
    block index).
    """
    normalized_bodies = {
        m.message_id: normalize_quoted_text(m.body) for m in corpus.messages
    }
    edges: list[QuoteEdge] = []
    for position, citing in enumerate(corpus.messages):
        blocks = blocks_by_message.get(citing.message_id, [])
        for index, block in enumerate(blocks):
            text = normalize_quoted_text(block.lines)
            chars = len(text)
            eligible = bool(text) and (chars >= min_match_chars or len(block.lines) >= 2)
            candidates: list[int] = []
            if eligible:
                for earlier_pos in range(position):
                    earlier = corpus.messages[earlier_pos]
                    if text in normalized_bodies[earlier.message_id]:
                        candidates.append(earlier_pos)
            if not candidates:
                edges.append(QuoteEdge(citing.message_id, "", index, chars, UNRESOLVED))
                continue
            parent = citing.in_reply_to
            candidate_ids = [corpus.messages[p].message_id for p in candidates]
            if parent is not None and parent in candidate_ids:
                edges.append(QuoteEdge(citing.message_id, parent, index, chars, VIA_REPLY_HEADER))
            else:
                latest = corpus.messages[max(candidates)].message_id
                edges.append(QuoteEdge(citing.message_id, latest, index, chars, EXACT))
    edges.sort(key=lambda e: (e.citing, e.block_index))
    return edges
