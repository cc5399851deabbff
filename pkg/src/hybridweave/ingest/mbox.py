"""mbox mailing-list archive parser.

Entries are delimited by lines starting with ``From `` (the mbox envelope
line).  Headers run up to the first blank line; everything after it is the
body, kept verbatim as text lines.  No MIME decoding is attempted: the
archives in scope are plain-text mailing lists.
"""

from __future__ import annotations

import hashlib
import logging
import re
from email import message_from_bytes
from email import policy
from typing import BinaryIO

from hybridweave.ingest.dates import parse_archive_date
from hybridweave.ingest.records import Message

logger = logging.getLogger(__name__)

_MSGID = re.compile(r"<([^<>]+)>")


def _split_entries(data: bytes) -> list[bytes]:
    """Split raw mbox bytes into per-message byte blobs (envelope line dropped)."""
    entries: list[bytes] = []
    current: list[bytes] = []
    in_entry = False
    for line in data.splitlines(keepends=True):
        if line.startswith(b"From "):
            if in_entry:
                entries.append(b"".join(current))
                current = []
            in_entry = True
            continue  # envelope line itself is not part of the message
        if in_entry:
            current.append(line)
    if in_entry:
        entries.append(b"".join(current))
    return entries


def _first_msgid(value: str | None) -> str | None:
    if not value:
        return None
    m = _MSGID.search(value)
    if m:
        return m.group(1)
    token = value.strip()
    return token or None


def _all_msgids(value: str | None) -> tuple[str, ...]:
    if not value:
        return ()
    return tuple(_MSGID.findall(value))


def parse_mbox(stream: BinaryIO | bytes, list_name: str) -> list[Message]:
    """Parse an mbox byte stream into Messages, sorted by (sent_at, message_id).

    Entries without a Message-ID get the synthetic id
    ``synth:<sha-256 of the entry bytes>``, which is stable across reruns.
    Entries that end before their header/body blank line are skipped with a
    warning; unparseable Date headers keep the message with ``sent_at`` 0 and
    ``date_malformed`` set.
    """
    data = stream if isinstance(stream, bytes) else stream.read()
    messages: list[Message] = []
    for entry in _split_entries(data):
        normalized = entry.replace(b"\r\n", b"\n")
        if b"\n\n" not in normalized:
            # No header/body blank line anywhere: entry was cut off mid-headers.
            logger.warning("skipping truncated mbox entry (%d bytes)", len(entry))
            continue
        parsed = message_from_bytes(entry, policy=policy.default)

        msgid = _first_msgid(parsed.get("Message-ID"))
        if msgid is None:
            msgid = "synth:" + hashlib.sha256(entry).hexdigest()

        date_raw = parsed.get("Date")
        sent_at = parse_archive_date(date_raw)
        malformed = sent_at is None
        if malformed:
            logger.warning("unparseable Date %r in %s; pinned to epoch 0", date_raw, msgid)
            sent_at = 0

        head, _, tail = normalized.partition(b"\n\n")
        body = tuple(tail.decode("utf-8", errors="replace").splitlines())

        messages.append(
            Message(
                message_id=msgid,
                author_raw=str(parsed.get("From", "")).strip(),
                sent_at=sent_at,
                subject=str(parsed.get("Subject", "")).strip(),
                in_reply_to=_first_msgid(parsed.get("In-Reply-To")),
                references=_all_msgids(parsed.get("References")),
                body=body,
                source_list=list_name,
                date_malformed=malformed,
            )
        )
    messages.sort(key=Message.sort_key)
    return messages
