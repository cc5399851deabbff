"""Contingency statistics, splits, and annotation ingestion tests."""

import io
import math
import random

import pytest

from conftest import FIXTURES
from hybridweave.errors import DegenerateTable, MissingRole, NoPairs
from hybridweave.quotegraph.resolve import QuoteEdge
from hybridweave.stats import (
    AnnotationRecord,
    ContingencyTable,
    activity_association,
    cramers_v,
    ingest_annotations,
    median_split,
    serialize_annotations,
)


def table(counts, rows=None, cols=None):
    rows = rows or [f"r{i}" for i in range(len(counts))]
    cols = cols or [f"c{j}" for j in range(len(counts[0]))]
    return ContingencyTable.from_counts(rows, cols, counts)


def test_table_validation():
    with pytest.raises(ValueError, match="row labels"):
        ContingencyTable(("a",), ("b", "c"), ((1, 2), (3, 4)), 10)
    with pytest.raises(ValueError, match="column labels"):
        ContingencyTable(("a", "b"), ("c",), ((1, 2), (3, 4)), 10)
    with pytest.raises(ValueError, match="nonnegative"):
        table([[1, -1], [2, 3]])
    with pytest.raises(ValueError, match="sum of all cells"):
        ContingencyTable(("a", "b"), ("c", "d"), ((1, 1), (1, 1)), 5)
    assert table([[1, 2], [3, 4]]).n == 10


def test_perfect_association_is_exactly_one():
    v, v2 = cramers_v(table([[10, 0], [0, 10]]))
    assert v == 1.0 and v2 == 1.0
    # Expected counts of [[3,0,0],[0,3,0],[0,0,3]] are exact in binary,
    # so this diagonal is bit-exact too.
    v, v2 = cramers_v(table([[3, 0, 0], [0, 3, 0], [0, 0, 3]]))
    assert v == 1.0 and v2 == 1.0
    # Non-square or unbalanced diagonals hit non-dyadic expected counts;
    # there the guarantee is 1e-12, not bit equality.
    v, _ = cramers_v(table([[5, 0], [0, 5], [0, 5]]))
    assert v == pytest.approx(1.0, abs=1e-12)
    v, _ = cramers_v(table([[7, 0, 0], [0, 7, 0], [0, 0, 7]]))
    assert v == pytest.approx(1.0, abs=1e-12)


def test_independence_is_exactly_zero():
    v, v2 = cramers_v(table([[5, 5], [5, 5]]))
    assert v == 0.0 and v2 == 0.0


def test_degenerate_tables_raise():
    with pytest.raises(DegenerateTable):
        cramers_v(table([[1, 2]]))  # one row
    with pytest.raises(DegenerateTable):
        cramers_v(table([[1], [2]]))  # one column
    with pytest.raises(DegenerateTable):
        cramers_v(table([[0, 0], [0, 0]]))  # empty
    with pytest.raises(DegenerateTable):
        cramers_v(table([[3, 4], [0, 0]]))  # single live row
    with pytest.raises(DegenerateTable):
        cramers_v(table([[3, 0], [4, 0]]))  # single live column


def test_matches_scipy_chi2():
    from scipy.stats import chi2_contingency

    rng = random.Random(1234)
    produced = 0
    while produced < 100:
        rows = rng.randint(2, 5)
        cols = rng.randint(2, 5)
        counts = [[rng.randint(0, 9) for _ in range(cols)] for _ in range(rows)]
        live_rows = sum(1 for row in counts if sum(row))
        live_cols = sum(1 for j in range(cols) if sum(row[j] for row in counts))
        if live_rows < rows or live_cols < cols:
            # scipy rejects zero marginals outright; the dead-marginal
            # path gets its own test below.
            continue
        produced += 1
        t = table(counts)
        v, v2 = cramers_v(t)
        chi2 = chi2_contingency(counts, correction=False).statistic
        expected_v2 = chi2 / (t.n * (min(rows, cols) - 1))
        assert v2 == pytest.approx(expected_v2, abs=1e-12)
        assert v == pytest.approx(math.sqrt(expected_v2), abs=1e-12)


def test_dead_marginals_are_skipped_not_collapsed():
    from scipy.stats import chi2_contingency

    # A zero row contributes nothing to chi-squared, but it still counts
    # toward the table dimensions in the min(r, c) - 1 normaliser.
    counts = [[4, 1, 3], [0, 0, 0], [2, 5, 1]]
    t = table(counts)
    v, v2 = cramers_v(t)
    chi2 = chi2_contingency([[4, 1, 3], [2, 5, 1]], correction=False).statistic
    assert v2 == pytest.approx(chi2 / (t.n * 2), abs=1e-12)
    assert v2 != pytest.approx(chi2 / (t.n * 1), abs=1e-12)
    assert v == pytest.approx(math.sqrt(v2), abs=1e-12)


def test_permutation_invariance_is_bit_exact():
    rng = random.Random(77)
    counts = [[rng.randint(0, 9) for _ in range(4)] for _ in range(3)]
    counts[0][0] += 1  # make sure the table is not empty
    base_v, base_v2 = cramers_v(table(counts))
    for _ in range(20):
        row_order = list(range(3))
        col_order = list(range(4))
        rng.shuffle(row_order)
        rng.shuffle(col_order)
        shuffled = [[counts[i][j] for j in col_order] for i in row_order]
        v, v2 = cramers_v(table(shuffled))
        assert v == base_v  # no tolerance: identical bits
        assert v2 == base_v2


def test_median_split_classes():
    counts = {"a": 10, "b": 2, "c": 5, "d": 1}
    roles = {"a": "leader", "b": "developer", "c": "administrator", "d": "champion"}
    split = median_split(counts, roles)
    assert split.median == 3.5
    assert split.classes == {"a": "HP_A", "b": "LP_D", "c": "HP_A", "d": "LP_D"}


def test_exactly_median_poster_is_low():
    counts = {"a": 4, "b": 2, "c": 6}
    roles = {"a": "developer", "b": "developer", "c": "developer"}
    split = median_split(counts, roles)
    assert split.median == 4.0
    assert split.classes["a"] == "LP_D"
    assert split.classes["c"] == "HP_D"


def test_all_equal_counts_everyone_low():
    counts = {"a": 3, "b": 3}
    roles = {"a": "leader", "b": "developer"}
    assert median_split(counts, roles).classes == {"a": "LP_A", "b": "LP_D"}


def test_median_split_errors():
    with pytest.raises(ValueError):
        median_split({}, {})
    with pytest.raises(MissingRole):
        median_split({"a": 1}, {})
    with pytest.raises(MissingRole):
        median_split({"a": 1}, {"a": "unknown"})


def test_ingest_mini_annotations():
    with open(FIXTURES / "mini" / "annotations.csv", newline="") as handle:
        records, rejected = ingest_annotations(handle)
    assert len(records) == 12
    assert rejected == []
    assert records[0] == AnnotationRecord("m2@example.com", "quote", 0, "elaboration", "coder1")


def test_ingest_collects_malformed_rows():
    text = (
        "message_id,segment,block_index,category,annotator\n"
        "# a comment line\n"
        "m1@x,quote,0,elaboration,coder1\n"
        "m1@x,quote,0,elaboration\n"
        "m2@x,quote,zero,evaluation,coder1\n"
        "m3@x,quote,-1,evaluation,coder1\n"
        "m4@x,carrier,0,evaluation,coder1\n"
        "m5@x,quote,0,sarcasm,coder1\n"
        "m6@x,quote,,grounding,coder1\n"
        "m7@x,comment,1,grounding,coder1\n"
    )
    records, rejected = ingest_annotations(io.StringIO(text))
    assert [r.message_id for r in records] == ["m1@x", "m7@x"]
    assert [(r.row, r.reason.split()[0]) for r in rejected] == [
        (4, "expected"),
        (5, "bad"),
        (6, "negative"),
        (7, "segment"),
        (8, "unknown"),
        (9, "quote"),
    ]


def test_serialize_roundtrip():
    records = [
        AnnotationRecord("m1@x", "quote", 0, "elaboration", "coder1"),
        AnnotationRecord("m1@x", "comment", 0, "evaluation", "coder1"),
        AnnotationRecord("m2@x", "comment", None, "other", "coder2"),
    ]
    text = serialize_annotations(records)
    back, rejected = ingest_annotations(io.StringIO(text))
    assert back == records
    assert rejected == []


def test_annotation_record_validation():
    with pytest.raises(ValueError):
        AnnotationRecord("m", "aside", 0, "elaboration", "c")
    with pytest.raises(ValueError):
        AnnotationRecord("m", "quote", 0, "snark", "c")
    with pytest.raises(ValueError):
        AnnotationRecord("m", "quote", None, "elaboration", "c")
    # Comments may omit the block index.
    AnnotationRecord("m", "comment", None, "elaboration", "c")


def ann(message_id, segment, block, category, annotator="coder1"):
    return AnnotationRecord(message_id, segment, block, category, annotator)


def test_activity_association_mini_fixture():
    with open(FIXTURES / "mini" / "annotations.csv", newline="") as handle:
        records, _ = ingest_annotations(handle)
    t, v, v2, share = activity_association(records)
    assert t.row_labels == ("elaboration", "evaluation", "grounding")
    assert t.col_labels == ("evaluation", "grounding", "coordination")
    assert t.counts == ((3, 0, 0), (0, 1, 1), (1, 0, 0))
    assert t.n == 6
    assert v2 == pytest.approx(0.5, abs=1e-12)
    assert v == pytest.approx(math.sqrt(0.5), abs=1e-12)
    assert share == pytest.approx(4 / 6)


def test_association_single_cell_has_no_v():
    records = [
        ann("m1@x", "quote", 0, "elaboration"),
        ann("m1@x", "comment", 0, "evaluation"),
        ann("m2@x", "quote", 0, "elaboration"),
        ann("m2@x", "comment", 0, "evaluation"),
    ]
    t, v, v2, share = activity_association(records)
    assert t.counts == ((2,),)
    assert v is None and v2 is None
    assert share == 1.0


def test_association_requires_pairs():
    with pytest.raises(NoPairs):
        activity_association([ann("m1@x", "quote", 0, "elaboration")])
    with pytest.raises(NoPairs):
        activity_association(
            [
                ann("m1@x", "quote", 0, "elaboration"),
                ann("m2@x", "comment", 0, "evaluation"),
            ]
        )


def test_association_pairs_require_same_annotator():
    records = [
        ann("m1@x", "quote", 0, "elaboration", "coder1"),
        ann("m1@x", "comment", 0, "evaluation", "coder2"),
    ]
    with pytest.raises(NoPairs):
        activity_association(records)


def test_association_filters_unknown_blocks():
    records = [
        ann("m1@x", "quote", 0, "elaboration"),
        ann("m1@x", "comment", 0, "evaluation"),
        ann("m9@x", "quote", 0, "grounding"),
        ann("m9@x", "comment", 0, "grounding"),
    ]
    edges = [QuoteEdge("m1@x", "m0@x", 0, 50, "exact")]
    t, _, _, share = activity_association(records, edges)
    # m9 has no resolved block 0, so its pair drops out of the table.
    assert t.counts == ((1,),)
    assert t.row_labels == ("elaboration",)
    # The share still covers every comment annotation.
    assert share == 0.5
