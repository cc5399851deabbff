"""Dataset assembly and on-disk serialization.

An output directory holds:

  config.json     the build parameter record
  actors.json     resolved actants, sorted by id
  messages.json   messages in corpus order, with reply parent, quote edges
                  (one per detected block), and quoted-by counts
  commits.json    commit records in corpus order
  snapshots.json  per-window hybrid networks with metrics and positions
  threads.json    per-thread graphs carrying both models
  peps.json       PEP documents with linked discussion ids
  report.json     the statistics bundle
  corpus.xml      canonical XML export

All JSON is sorted-key, two-space indented, newline-terminated.  Writes
are atomic: files land in a temporary directory beside the target, which
is then renamed into place, so readers never observe a partial dataset.
"""

from __future__ import annotations

import json
import os
import shutil
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from hybridweave.hybridnet.snapshot import HybridSnapshot, MetricBundle, artifact_node_id
from hybridweave.ingest.records import Corpus
from hybridweave.pepmodel import PepDocument
from hybridweave.quotegraph.blocks import QuoteBlock
from hybridweave.quotegraph.resolve import UNRESOLVED, QuoteEdge
from hybridweave.quotegraph.threads import ThreadGraph
from hybridweave.xmlexport import corpus_xml_from_json

DATASET_JSON_FILES = (
    "config.json",
    "actors.json",
    "messages.json",
    "commits.json",
    "snapshots.json",
    "threads.json",
    "peps.json",
    "report.json",
)


@dataclass
class Dataset:
    """Everything one pipeline run produced."""

    corpus: Corpus
    snapshots: list[HybridSnapshot]
    threads: list[ThreadGraph]
    peps: list[PepDocument]
    reports: dict
    build_config: dict
    quote_edges: list[QuoteEdge] = field(default_factory=list)
    blocks_by_message: dict[str, list[QuoteBlock]] = field(default_factory=dict)
    # pep number -> discussion message ids in corpus order
    discussions: dict[int, list[str]] = field(default_factory=dict)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def snapshot_json(snapshot: HybridSnapshot) -> dict:
    nodes = []
    for node_id in sorted(snapshot.nodes):
        bundle = snapshot.metrics.get(node_id, MetricBundle())
        nodes.append(
            {
                "id": node_id,
                "kind": snapshot.nodes[node_id],
                "label": snapshot.labels.get(node_id, node_id),
                "metrics": {
                    "degree": bundle.degree,
                    "weighted_degree": bundle.weighted_degree,
                    "betweenness": bundle.betweenness,
                },
            }
        )
    edges = [
        {"src": a, "dst": b, "kind": "comm", "weight": weight}
        for (a, b), weight in sorted(snapshot.comm_edges.items())
    ]
    edges += [
        {"src": person, "dst": artifact, "kind": "contrib", "weight": weight}
        for (person, artifact), weight in sorted(snapshot.contrib_edges.items())
    ]
    positions = [
        {"id": node_id, "x": snapshot.positions[node_id][0], "y": snapshot.positions[node_id][1]}
        for node_id in sorted(snapshot.positions)
    ]
    return {
        "window": {"start": snapshot.window[0], "end": snapshot.window[1]},
        "nodes": nodes,
        "edges": edges,
        "positions": positions,
    }


def thread_json(thread: ThreadGraph, corpus: Corpus) -> dict:
    return {
        "id": thread.thread_id,
        "message_ids": sorted(thread.message_ids, key=corpus.order),
        "reply_edges": [list(edge) for edge in sorted(thread.reply_edges)],
        "quote_edges": [
            {
                "citing": edge.citing,
                "cited": edge.cited,
                "block_index": edge.block_index,
                "match_chars": edge.match_chars,
                "resolution": edge.resolution,
            }
            for edge in thread.quote_edges
        ],
        "theme_labels": dict(sorted(thread.theme_labels.items())),
        "branch_points": sorted(thread.branch_points),
        "chains": [list(chain) for chain in thread.chains],
    }


def pep_json(pep: PepDocument, discussion: list[str]) -> dict:
    return {
        "number": pep.number,
        "title": pep.title,
        "champion": pep.champion,
        "status": pep.status,
        "history": [
            {"status": status, "at": at, "source": source}
            for status, at, source in pep.status_history
        ],
        "discussion": list(discussion),
    }


def dataset_files(dataset: Dataset) -> dict[str, str]:
    """Render every dataset file as a string, keyed by file name."""
    corpus = dataset.corpus
    parents: dict[str, str] = {}
    for thread in dataset.threads:
        for child, parent in thread.reply_edges:
            parents[child] = parent

    edges_by_citing: dict[str, list[QuoteEdge]] = {}
    citers: dict[str, set[str]] = {}
    for edge in dataset.quote_edges:
        edges_by_citing.setdefault(edge.citing, []).append(edge)
        if edge.resolution != UNRESOLVED and edge.cited:
            citers.setdefault(edge.cited, set()).add(edge.citing)

    granularity = dataset.build_config.get("artifact_granularity", "project")

    messages = []
    for m in corpus.messages:
        quotes = [
            {
                "cited": edge.cited,
                "block_index": edge.block_index,
                "match_chars": edge.match_chars,
                "resolution": edge.resolution,
            }
            for edge in sorted(
                edges_by_citing.get(m.message_id, []), key=lambda e: e.block_index
            )
        ]
        messages.append(
            {
                "id": m.message_id,
                "author": m.author,
                "author_raw": m.author_raw,
                "sent_at": m.sent_at,
                "date_malformed": m.date_malformed,
                "subject": m.subject,
                "source_list": m.source_list,
                "in_reply_to": m.in_reply_to,
                "references": list(m.references),
                "reply_parent": parents.get(m.message_id),
                "quotes": quotes,
                "quoted_by": len(citers.get(m.message_id, ())),
                "body": list(m.body),
            }
        )

    commits = []
    for c in corpus.commits:
        node_id, _ = artifact_node_id(c.file_path, granularity)
        commits.append(
            {
                "file_path": c.file_path,
                "revision": c.revision,
                "author": c.author,
                "author_raw": c.author_raw,
                "committed_at": c.committed_at,
                "lines_added": c.lines_added,
                "lines_removed": c.lines_removed,
                "log_message": c.log_message,
                "artifact": node_id,
            }
        )

    actors = [
        {
            "id": actant.id,
            "kind": actant.kind,
            "label": actant.label,
            "aliases": list(actant.aliases),
            "role": actant.role,
        }
        for _, actant in sorted(corpus.actants.items())
    ]

    peps = [
        pep_json(pep, dataset.discussions.get(pep.number, []))
        for pep in dataset.peps
    ]

    files = {
        "config.json": _dumps(dataset.build_config),
        "actors.json": _dumps(actors),
        "messages.json": _dumps(messages),
        "commits.json": _dumps(commits),
        "snapshots.json": _dumps([snapshot_json(s) for s in dataset.snapshots]),
        "threads.json": _dumps([thread_json(t, corpus) for t in dataset.threads]),
        "peps.json": _dumps(peps),
        "report.json": _dumps(dataset.reports),
        "corpus.xml": corpus_xml_from_json(actors, messages, commits, peps),
    }
    return files


def write_dataset(dataset: Dataset, outdir: str | Path) -> Path:
    """Write the dataset atomically; an existing directory is replaced."""
    outdir = Path(outdir)
    files = dataset_files(dataset)
    outdir.parent.mkdir(parents=True, exist_ok=True)
    staging = Path(tempfile.mkdtemp(prefix=".hybridweave-", dir=outdir.parent))
    try:
        for name, content in sorted(files.items()):
            (staging / name).write_text(content, encoding="utf-8")
        if outdir.exists():
            shutil.rmtree(outdir)
        os.replace(staging, outdir)
    except BaseException:
        shutil.rmtree(staging, ignore_errors=True)
        raise
    return outdir


def load_dataset(outdir: str | Path) -> dict:
    """Load the JSON half of a dataset directory into memory."""
    outdir = Path(outdir)
    loaded = {}
    for name in DATASET_JSON_FILES:
        with open(outdir / name, encoding="utf-8") as handle:
            loaded[name.removesuffix(".json")] = json.load(handle)
    return loaded
