"""Contingency statistics, participant splits, and activity annotations.

Cramér's V here is the classical bias-uncorrected statistic.  Cell terms
are accumulated with math.fsum, which is exactly rounded, so the value is
bit-identical under any row or column permutation of the table.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import statistics
from dataclasses import dataclass
from typing import Iterable, Mapping

from hybridweave.errors import DegenerateTable, MissingRole, NoPairs

logger = logging.getLogger(__name__)

CATEGORIES = ("elaboration", "evaluation", "grounding", "coordination", "other")
SEGMENTS = ("quote", "comment")

_CSV_HEADER = ("message_id", "segment", "block_index", "category", "annotator")


@dataclass(frozen=True)
class ContingencyTable:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        if len(self.counts) != len(self.row_labels):
            raise ValueError("count matrix does not match row labels")
        for row in self.counts:
            if len(row) != len(self.col_labels):
                raise ValueError("count matrix does not match column labels")
            if any(cell < 0 for cell in row):
                raise ValueError("cell counts must be nonnegative")
        if self.n != sum(cell for row in self.counts for cell in row):
            raise ValueError("n must equal the sum of all cells")

    @classmethod
    def from_counts(
        cls,
        row_labels: Iterable[str],
        col_labels: Iterable[str],
        counts: Iterable[Iterable[int]],
    ) -> "ContingencyTable":
        matrix = tuple(tuple(int(cell) for cell in row) for row in counts)
        total = sum(cell for row in matrix for cell in row)
        return cls(tuple(row_labels), tuple(col_labels), matrix, total)


def cramers_v(table: ContingencyTable) -> tuple[float, float]:
    """Return (V, V squared) for the table.

    Raises DegenerateTable unless the table is at least 2x2, has data, and
    has two or more nonzero row sums and column sums.
    """
    rows, cols = len(table.row_labels), len(table.col_labels)
    if rows < 2 or cols < 2 or table.n <= 0:
        raise DegenerateTable(f"need a filled 2x2+ table, got {rows}x{cols} n={table.n}")
    row_sums = [sum(row) for row in table.counts]
    col_sums = [sum(row[j] for row in table.counts) for j in range(cols)]
    if sum(1 for s in row_sums if s) < 2 or sum(1 for s in col_sums if s) < 2:
        raise DegenerateTable("association needs two nonzero rows and columns")
    n = table.n
    terms = []
    for i in range(rows):
        for j in range(cols):
            expected = row_sums[i] * col_sums[j] / n
            # Zero marginals force observed zero too; skip the 0/0 cell.
            if expected > 0.0:
                terms.append((table.counts[i][j] - expected) ** 2 / expected)
    chi_squared = math.fsum(terms)
    v_squared = chi_squared / (n * (min(rows, cols) - 1))
    return math.sqrt(v_squared), v_squared


@dataclass(frozen=True)
class ParticipantSplit:
    median: float
    classes: dict[str, str]


# Leaders act as administrators and champions post as developers for the
# high/low participation cross-tabulation.
_ROLE_SIDE = {
    "administrator": "A",
    "leader": "A",
    "developer": "D",
    "champion": "D",
}


def median_split(
    message_counts: Mapping[str, int], roles: Mapping[str, str]
) -> ParticipantSplit:
    """Split posters at the median message count, crossed with binary role.

    High participants post strictly more than the median; exactly-median
    posters land in the low class.
    """
    if not message_counts:
        raise ValueError("message_counts must not be empty")
    median = float(statistics.median(message_counts.values()))
    classes: dict[str, str] = {}
    for person in sorted(message_counts):
        side = _ROLE_SIDE.get(roles.get(person, ""))
        if side is None:
            raise MissingRole(f"no administrator/developer role for {person}")
        level = "HP" if message_counts[person] > median else "LP"
        classes[person] = f"{level}_{side}"
    return ParticipantSplit(median=median, classes=classes)


@dataclass(frozen=True)
class AnnotationRecord:
    """One human judgment: the activity category of a quote block or of
    the comment text that follows it."""

    message_id: str
    segment: str
    block_index: int | None
    category: str
    annotator: str

    def __post_init__(self) -> None:
        if self.segment not in SEGMENTS:
            raise ValueError(f"segment must be one of {SEGMENTS}, got {self.segment!r}")
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")
        if self.segment == "quote" and self.block_index is None:
            raise ValueError("quote annotations need a block index")


@dataclass(frozen=True)
class MalformedRow:
    row: int
    reason: str
    raw: str


def ingest_annotations(stream) -> tuple[list[AnnotationRecord], list[MalformedRow]]:
    """Parse annotation CSV rows; bad rows are collected, not fatal.

    Rows are message_id, segment, block_index, category, annotator; a
    header row and "#" comment lines are skipped.  Returns (records,
    rejected rows); every rejection is also logged with its line number.
    """
    records: list[AnnotationRecord] = []
    rejected: list[MalformedRow] = []
    reader = csv.reader(stream)
    for row in reader:
        if not row or row[0].lstrip().startswith("#"):
            continue
        stripped = [cell.strip() for cell in row]
        if stripped == list(_CSV_HEADER):
            continue
        line = reader.line_num
        raw = ",".join(row)
        if len(stripped) != 5:
            rejected.append(MalformedRow(line, f"expected 5 fields, got {len(stripped)}", raw))
            continue
        message_id, segment, block_raw, category, annotator = stripped
        block_index: int | None = None
        if block_raw:
            try:
                block_index = int(block_raw)
            except ValueError:
                rejected.append(MalformedRow(line, f"bad block index {block_raw!r}", raw))
                continue
            if block_index < 0:
                rejected.append(MalformedRow(line, "negative block index", raw))
                continue
        try:
            record = AnnotationRecord(message_id, segment, block_index, category, annotator)
        except ValueError as exc:
            rejected.append(MalformedRow(line, str(exc), raw))
            continue
        records.append(record)
    for bad in rejected:
        logger.warning("annotation row %d rejected: %s", bad.row, bad.reason)
    return records, rejected


def serialize_annotations(records: Iterable[AnnotationRecord]) -> str:
    """Inverse of ingest_annotations for valid records."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    for record in records:
        writer.writerow(
            [
                record.message_id,
                record.segment,
                "" if record.block_index is None else record.block_index,
                record.category,
                record.annotator,
            ]
        )
    return out.getvalue()


def activity_association(
    annotations: Iterable[AnnotationRecord], quote_edges=None
) -> tuple[ContingencyTable, float | None, float | None, float]:
    """Cross-tabulate quote categories against the following comment's.

    A quote annotation pairs with the comment annotation for the same
    (message, block index, annotator); pairs lacking either side drop out.
    When quote_edges is given, quote annotations must reference a resolved
    block.  Returns (table, V, V squared, comment evaluation share); V and
    V squared are None when the pair table is too concentrated to measure
    association.
    """
    annotations = list(annotations)
    comments = [a for a in annotations if a.segment == "comment"]
    if not comments:
        raise NoPairs("no comment annotations")
    known_blocks = None
    if quote_edges is not None:
        known_blocks = {(edge.citing, edge.block_index) for edge in quote_edges}
    quote_cat: dict[tuple[str, int, str], str] = {}
    comment_cat: dict[tuple[str, int, str], str] = {}
    for a in annotations:
        if a.block_index is None:
            continue
        if a.segment == "quote":
            if known_blocks is not None and (a.message_id, a.block_index) not in known_blocks:
                continue
            quote_cat[(a.message_id, a.block_index, a.annotator)] = a.category
        else:
            comment_cat[(a.message_id, a.block_index, a.annotator)] = a.category
    pairs = [
        (quote_cat[key], comment_cat[key])
        for key in sorted(quote_cat)
        if key in comment_cat
    ]
    if not pairs:
        raise NoPairs("no quote/comment pairs")
    row_labels = tuple(c for c in CATEGORIES if any(q == c for q, _ in pairs))
    col_labels = tuple(c for c in CATEGORIES if any(m == c for _, m in pairs))
    row_index = {c: i for i, c in enumerate(row_labels)}
    col_index = {c: i for i, c in enumerate(col_labels)}
    counts = [[0] * len(col_labels) for _ in row_labels]
    for quote_side, comment_side in pairs:
        counts[row_index[quote_side]][col_index[comment_side]] += 1
    table = ContingencyTable.from_counts(row_labels, col_labels, counts)
    try:
        v, v_squared = cramers_v(table)
    except DegenerateTable:
        v = v_squared = None
    share = sum(1 for a in comments if a.category == "evaluation") / len(comments)
    return table, v, v_squared, share
