"""Quote block detection inside message bodies.

A quoted line is optional leading whitespace followed by one or more ">"
markers, with single spaces allowed between markers.  A block is a maximal
run of consecutive quoted lines sharing one depth.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from hybridweave.ingest.records import Message

QUOTE_PREFIX = re.compile(r"^[ \t]*((?:>[ \t]?)+)")

_ATTRIBUTION_SUFFIXES = ("wrote:", "writes:")


@dataclass(frozen=True)
class QuoteBlock:
    """One detected quotation: prefix-stripped lines at a constant depth.

    ``line_span`` is a half-open (start, end) index range into the citing
    message's body.
    """

    lines: tuple[str, ...]
    depth: int
    line_span: tuple[int, int]
    attribution_hint: str | None = None


def quote_depth(line: str) -> tuple[int, str]:
    """(marker count, remaining content) for a body line; depth 0 if unquoted."""
    m = QUOTE_PREFIX.match(line)
    if not m:
        return 0, line
    return m.group(1).count(">"), line[m.end():]


def _is_signature_delimiter(line: str) -> bool:
    return line.rstrip() == "--"


def detect_quotes(message: Message) -> list[QuoteBlock]:
    """Return the message's quote blocks in body order.

    A non-quoted line directly above a block that ends with "wrote:" or
    "writes:" becomes the block's attribution hint.  Hints are no longer
    assigned once a "-- " signature delimiter has been passed; block
    detection itself is unaffected.
    """
    body = message.body
    blocks: list[QuoteBlock] = []
    sig_seen = False
    i = 0
    n = len(body)
    while i < n:
        line = body[i]
        depth, content = quote_depth(line)
        if depth == 0:
            if _is_signature_delimiter(line):
                sig_seen = True
            i += 1
            continue
        start = i
        lines = [content]
        i += 1
        while i < n:
            d, c = quote_depth(body[i])
            if d != depth:
                break
            lines.append(c)
            i += 1
        hint = None
        if start > 0 and not sig_seen:
            above = body[start - 1]
            if quote_depth(above)[0] == 0 and above.rstrip().lower().endswith(_ATTRIBUTION_SUFFIXES):
                hint = above.strip()
        blocks.append(
            QuoteBlock(
                lines=tuple(lines),
                depth=depth,
                line_span=(start, i),
                attribution_hint=hint,
            )
        )
    return blocks
