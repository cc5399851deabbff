"""Timestamp parsing for the two archive families in scope.

Accepts RFC-2822-style mail dates and the CVS ``YYYY/MM/DD HH:MM:SS`` form,
both normalized to integer UTC seconds.
"""

from __future__ import annotations

import re
from datetime import datetime, timezone
from email.utils import parsedate_to_datetime

_CVS_DATE = re.compile(
    r"^\s*(\d{4})[/-](\d{1,2})[/-](\d{1,2})\s+(\d{1,2}):(\d{2}):(\d{2})"
)


def parse_archive_date(text: str | None) -> int | None:
    """Return UTC seconds for a date string, or None when unparseable."""
    if not text:
        return None
    text = text.strip()
    m = _CVS_DATE.match(text)
    if m:
        y, mo, d, h, mi, s = (int(g) for g in m.groups())
        try:
            dt = datetime(y, mo, d, h, mi, s, tzinfo=timezone.utc)
        except ValueError:
            return None
        return int(dt.timestamp())
    try:
        dt = parsedate_to_datetime(text)
    except (TypeError, ValueError):
        return None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return int(dt.timestamp())


def format_utc(ts: int) -> str:
    """ISO-8601 Zulu form used by the XML export."""
    return datetime.fromtimestamp(ts, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_utc(text: str) -> int:
    dt = datetime.strptime(text, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)
    return int(dt.timestamp())
