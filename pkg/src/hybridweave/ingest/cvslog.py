"""`cvs log` text parser.

Expected layout, one section per RCS file::

    RCS file: /cvsroot/project/src/module.c,v
    Working file: src/module.c
    ...
    ----------------------------
    revision 1.2
    date: 2002/03/28 12:00:00;  author: fred;  state: Exp;  lines: +10 -2
    log text, possibly several lines
    ----------------------------
    revision 1.1
    date: 2002/03/01 09:00:00;  author: fred;  state: Exp;
    Initial revision.
    =============================================================================

The initial revision of a file carries no ``lines:`` field and is recorded
as +0/-0.  Stanzas missing their date or author are skipped with a warning.
"""

from __future__ import annotations

import logging
import re
from typing import BinaryIO

from hybridweave.ingest.dates import parse_archive_date
from hybridweave.ingest.records import CommitRecord

logger = logging.getLogger(__name__)

_STANZA_SEP = re.compile(r"^-{10,}$")
_FILE_SEP = re.compile(r"^={10,}$")
_REVISION = re.compile(r"^revision\s+(\S+)")
_DATE_LINE = re.compile(
    r"^date:\s*(?P<date>[^;]+);\s*author:\s*(?P<author>[^;]+);"
    r"\s*state:\s*[^;]*;?(?:\s*lines:\s*\+(?P<added>\d+)\s+-(?P<removed>\d+))?"
)


def _relative_path(rcs_path: str) -> str:
    path = rcs_path.strip()
    if path.endswith(",v"):
        path = path[:-2]
    return path


def parse_cvs_log(stream: BinaryIO | bytes | str) -> list[CommitRecord]:
    """Parse `cvs log` output into CommitRecords.

    The ``Working file:`` line supplies the repository-relative path; when it
    is absent the ``RCS file:`` path (minus the ``,v`` suffix) is used.
    Output is sorted by (committed_at, file_path, revision).
    """
    if isinstance(stream, bytes):
        text = stream.decode("utf-8", errors="replace")
    elif isinstance(stream, str):
        text = stream
    else:
        text = stream.read().decode("utf-8", errors="replace")

    records: list[CommitRecord] = []
    rcs_path = ""
    working_path = ""
    lines = text.splitlines()
    i = 0
    n = len(lines)
    while i < n:
        line = lines[i]
        if line.startswith("RCS file:"):
            rcs_path = _relative_path(line.partition(":")[2])
            working_path = ""
            i += 1
            continue
        if line.startswith("Working file:"):
            working_path = line.partition(":")[2].strip()
            i += 1
            continue
        if _STANZA_SEP.match(line):
            i += 1
            if i >= n or not _REVISION.match(lines[i]):
                continue
            revision = _REVISION.match(lines[i]).group(1)
            i += 1
            date_match = _DATE_LINE.match(lines[i]) if i < n else None
            if date_match is None:
                logger.warning("skipping malformed stanza for revision %s of %s",
                               revision, working_path or rcs_path)
                while i < n and not (_STANZA_SEP.match(lines[i]) or _FILE_SEP.match(lines[i])):
                    i += 1
                continue
            committed_at = parse_archive_date(date_match.group("date"))
            author = date_match.group("author").strip()
            if committed_at is None or not author:
                logger.warning("skipping malformed stanza for revision %s of %s",
                               revision, working_path or rcs_path)
                committed_at = None
            i += 1
            if i < n and lines[i].startswith("branches:"):
                i += 1
            log_lines: list[str] = []
            while i < n and not (_STANZA_SEP.match(lines[i]) or _FILE_SEP.match(lines[i])):
                log_lines.append(lines[i])
                i += 1
            if committed_at is None:
                continue
            records.append(
                CommitRecord(
                    file_path=working_path or rcs_path,
                    revision=revision,
                    author_raw=author,
                    committed_at=committed_at,
                    lines_added=int(date_match.group("added") or 0),
                    lines_removed=int(date_match.group("removed") or 0),
                    log_message="\n".join(log_lines).strip(),
                )
            )
            continue
        i += 1
    records.sort(key=CommitRecord.sort_key)
    return records
