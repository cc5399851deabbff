"""Temporal snapshots of the people+artifact network.

Windows are half-open UTC second ranges [start, end).  A message is
"exchanged" between its author and the author of its reply-graph parent; the
exchange is attributed to the window containing the child message, so that
per-window weights sum exactly to the whole-span recount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from typing import Mapping

from hybridweave.ingest.records import ARTIFACT, PERSON, Corpus
from hybridweave.quotegraph.threads import build_reply_graph

PROJECT_NODE = "a:project"


@dataclass(frozen=True)
class MetricBundle:
    degree: int = 0
    weighted_degree: int = 0
    betweenness: float = 0.0


@dataclass
class HybridSnapshot:
    """The hybrid network for one time window."""

    window: tuple[int, int]
    nodes: dict[str, str]  # id -> "person" | "artifact"
    labels: dict[str, str]
    comm_edges: dict[tuple[str, str], int]  # unordered person pair, ids sorted
    contrib_edges: dict[tuple[str, str], int]  # (person, artifact)
    positions: dict[str, tuple[float, float]] = field(default_factory=dict)
    metrics: dict[str, MetricBundle] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not self.nodes


def artifact_node_id(file_path: str, granularity: str) -> tuple[str, str]:
    """(node id, label) for the artifact aggregating a file path."""
    if granularity == "project":
        return PROJECT_NODE, "project"
    path = file_path.lstrip("/")
    if granularity == "directory":
        path = path.split("/", 1)[0]
    elif granularity != "file":
        raise ValueError(f"unknown artifact granularity {granularity!r}")
    return "a:" + path, path


def reply_parents(corpus: Corpus) -> dict[str, str]:
    """child message id -> parent message id, from the reply graph."""
    graph = build_reply_graph(corpus)
    return {child: parent for child, parent in graph.reply_edges}


def build_snapshot(
    corpus: Corpus,
    window: tuple[int, int],
    artifact_granularity: str = "project",
    parents: Mapping[str, str] | None = None,
) -> HybridSnapshot:
    """Build one window's snapshot (metrics filled, positions left empty).

    A window with no activity yields an empty snapshot, not an error.
    """
    from hybridweave.hybridnet.metrics import compute_metrics

    start, end = window
    if start >= end:
        raise ValueError("window start must precede end")
    if parents is None:
        parents = reply_parents(corpus)

    nodes: dict[str, str] = {}
    labels: dict[str, str] = {}
    comm: dict[tuple[str, str], int] = {}
    contrib: dict[tuple[str, str], int] = {}

    def add_person(actant_id: str) -> None:
        nodes[actant_id] = PERSON
        actant = corpus.actants.get(actant_id)
        labels[actant_id] = actant.label if actant else actant_id

    for m in corpus.messages:
        if not (start <= m.sent_at < end):
            continue
        add_person(m.author)
        parent_id = parents.get(m.message_id)
        if parent_id is None:
            continue
        parent = corpus.message(parent_id)
        if parent is None or parent.author == m.author:
            continue
        add_person(parent.author)
        key = (m.author, parent.author) if m.author < parent.author else (parent.author, m.author)
        comm[key] = comm.get(key, 0) + 1

    for c in corpus.commits:
        if not (start <= c.committed_at < end):
            continue
        add_person(c.author)
        node_id, label = artifact_node_id(c.file_path, artifact_granularity)
        nodes[node_id] = ARTIFACT
        labels[node_id] = label
        key = (c.author, node_id)
        contrib[key] = contrib.get(key, 0) + 1

    snapshot = HybridSnapshot(
        window=window,
        nodes=nodes,
        labels=labels,
        comm_edges=comm,
        contrib_edges=contrib,
    )
    return compute_metrics(snapshot)


def _month_floor(ts: int) -> datetime:
    dt = datetime.fromtimestamp(ts, tz=timezone.utc)
    return dt.replace(day=1, hour=0, minute=0, second=0, microsecond=0)


def _next_month(dt: datetime) -> datetime:
    if dt.month == 12:
        return dt.replace(year=dt.year + 1, month=1)
    return dt.replace(month=dt.month + 1)


def _week_floor(ts: int) -> datetime:
    dt = datetime.fromtimestamp(ts, tz=timezone.utc)
    dt = dt.replace(hour=0, minute=0, second=0, microsecond=0)
    return dt - timedelta(days=dt.weekday())


def window_spans(
    corpus: Corpus, unit: str = "month", custom_days: int | None = None
) -> list[tuple[int, int]]:
    """Consecutive non-overlapping calendar windows covering the corpus span."""
    times = [m.sent_at for m in corpus.messages] + [c.committed_at for c in corpus.commits]
    if not times:
        raise ValueError("corpus has no dated events")
    t0, t1 = min(times), max(times)

    spans: list[tuple[int, int]] = []
    if unit == "month":
        cursor = _month_floor(t0)
        while int(cursor.timestamp()) <= t1:
            nxt = _next_month(cursor)
            spans.append((int(cursor.timestamp()), int(nxt.timestamp())))
            cursor = nxt
    elif unit == "week":
        cursor = _week_floor(t0)
        while int(cursor.timestamp()) <= t1:
            nxt = cursor + timedelta(days=7)
            spans.append((int(cursor.timestamp()), int(nxt.timestamp())))
            cursor = nxt
    elif unit == "custom":
        if not custom_days or custom_days < 1:
            raise ValueError("custom window unit requires custom_days >= 1")
        dt = datetime.fromtimestamp(t0, tz=timezone.utc)
        cursor = dt.replace(hour=0, minute=0, second=0, microsecond=0)
        while int(cursor.timestamp()) <= t1:
            nxt = cursor + timedelta(days=custom_days)
            spans.append((int(cursor.timestamp()), int(nxt.timestamp())))
            cursor = nxt
    else:
        raise ValueError(f"unknown window unit {unit!r}")
    return spans


def snapshot_series(
    corpus: Corpus,
    unit: str = "month",
    artifact_granularity: str = "project",
    custom_days: int | None = None,
) -> list[HybridSnapshot]:
    """One snapshot per calendar window, in window order."""
    parents = reply_parents(corpus)
    return [
        build_snapshot(corpus, span, artifact_granularity, parents)
        for span in window_spans(corpus, unit, custom_days)
    ]
