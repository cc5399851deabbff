"""End-to-end pipeline: ingest -> quotegraph -> hybridnet -> pepmodel -> stats.

Any stage failure surfaces as PipelineError("<stage>: ...") and, because
the dataset is written atomically at the very end, a failed run leaves no
partial output directory behind.
"""

from __future__ import annotations

import logging
from collections import Counter
from contextlib import contextmanager
from dataclasses import asdict
from pathlib import Path

from hybridweave.config import PipelineConfig, load_config
from hybridweave.dataset import Dataset, write_dataset
from hybridweave.errors import (
    InsufficientOverlap,
    InsufficientVariance,
    NoPairs,
    PipelineError,
)
from hybridweave.hybridnet.correlation import structure_correlation
from hybridweave.hybridnet.layout import layout_snapshot
from hybridweave.hybridnet.snapshot import build_snapshot, window_spans
from hybridweave.hybridnet.trajectory import compute_trajectory
from hybridweave.ingest.cvslog import parse_cvs_log
from hybridweave.ingest.identity import (
    load_alias_table,
    load_roles_table,
    resolve_identities,
)
from hybridweave.ingest.mbox import parse_mbox
from hybridweave.ingest.records import ADMIN_ROLES
from hybridweave.pepmodel import link_discussion, parse_pep_file, validate_transition
from hybridweave.quotegraph.blocks import detect_quotes
from hybridweave.quotegraph.resolve import resolve_quote_sources
from hybridweave.quotegraph.statistics import quote_statistics
from hybridweave.quotegraph.threads import (
    build_reply_graph,
    classify_structure,
    compare_models,
    split_threads,
    with_quote_edges,
)
from hybridweave.stats import activity_association, ingest_annotations, median_split

logger = logging.getLogger(__name__)

# Roles median_split accepts directly; anything else posts as a developer.
_SPLIT_ROLES = ("leader", "administrator", "developer", "champion")


@contextmanager
def _stage(name: str):
    logger.info("stage %s", name)
    try:
        yield
    except PipelineError:
        raise
    except Exception as exc:
        raise PipelineError(f"{name}: {exc}") from exc


def build_dataset(config: PipelineConfig) -> Dataset:
    """Run every stage and return the in-memory dataset."""
    with _stage("ingest"):
        messages = []
        for list_name, path in config.mboxes:
            with open(path, "rb") as handle:
                messages.extend(parse_mbox(handle, list_name))
        commits = []
        for path in config.cvs_logs:
            with open(path, "rb") as handle:
                commits.extend(parse_cvs_log(handle.read()))
        alias_table = None
        if config.aliases:
            with open(config.aliases, encoding="utf-8") as handle:
                alias_table = load_alias_table(handle)
        roles_table = None
        if config.roles:
            with open(config.roles, encoding="utf-8") as handle:
                roles_table = load_roles_table(handle)
        corpus = resolve_identities(
            messages,
            commits,
            alias_table,
            roles_table,
            roles_source=str(config.roles or ""),
        )

    with _stage("quotegraph"):
        blocks_by_message = {m.message_id: detect_quotes(m) for m in corpus.messages}
        quote_edges = resolve_quote_sources(
            corpus, blocks_by_message, config.min_match_chars
        )
        graph = with_quote_edges(build_reply_graph(corpus), quote_edges)
        threads = split_threads(graph, corpus)

    with _stage("hybridnet"):
        parents = {child: parent for child, parent in graph.reply_edges}
        snapshots = []
        spans = window_spans(corpus, config.window_unit, config.custom_window_days)
        for index, span in enumerate(spans):
            snapshot = build_snapshot(
                corpus, span, config.artifact_granularity, parents
            )
            # Per-window seed keeps layouts independent yet reproducible.
            snapshot.positions = layout_snapshot(snapshot, seed=config.seed + index)
            snapshots.append(snapshot)

    with _stage("pepmodel"):
        peps = []
        if config.peps_dir:
            for path in sorted(Path(config.peps_dir).iterdir()):
                if not path.is_file():
                    continue
                text = path.read_text(encoding="utf-8", errors="replace")
                peps.append(parse_pep_file(text, alias_table))
        peps.sort(key=lambda p: p.number)
        if config.strict_pep_mode:
            for pep in peps:
                history = pep.status_history
                for (src, _, _), (dst, _, _) in zip(history, history[1:]):
                    if not validate_transition(src, dst, strict=True):
                        raise PipelineError(
                            f"pepmodel: PEP {pep.number} history holds"
                            f" {src} -> {dst}, illegal in strict mode"
                        )
        discussions = {
            pep.number: sorted(
                link_discussion(corpus, pep.number, graph), key=corpus.order
            )
            for pep in peps
        }

    with _stage("stats"):
        reports = _build_reports(
            config, corpus, blocks_by_message, quote_edges, graph, discussions
        )

    return Dataset(
        corpus=corpus,
        snapshots=snapshots,
        threads=threads,
        peps=peps,
        reports=reports,
        build_config=config.as_record(),
        quote_edges=quote_edges,
        blocks_by_message=blocks_by_message,
        discussions=discussions,
    )


def _build_reports(config, corpus, blocks_by_message, quote_edges, graph, discussions):
    qstats = quote_statistics(corpus, blocks_by_message, quote_edges)

    message_counts = Counter(m.author for m in corpus.messages)
    split_roles = {}
    for person in message_counts:
        actant = corpus.actants.get(person)
        role = actant.role if actant else "unknown"
        split_roles[person] = role if role in _SPLIT_ROLES else "developer"
    split = median_split(message_counts, split_roles)

    roles_by_message = {
        m.message_id: (
            corpus.actants[m.author].role if m.author in corpus.actants else "unknown"
        )
        for m in corpus.messages
    }
    structure = classify_structure(graph, roles_by_message)
    divergence = compare_models(graph)

    try:
        corr = structure_correlation(corpus, graph)
        correlation = {
            "correlation": corr.correlation,
            "n_persons": corr.n_persons,
            "n_modules": corr.n_modules,
            "n_threads": corr.n_threads,
        }
    except (InsufficientOverlap, InsufficientVariance) as exc:
        correlation = {"error": str(exc)}

    association = None
    if config.annotations:
        with open(config.annotations, encoding="utf-8", newline="") as handle:
            records, rejected = ingest_annotations(handle)
        try:
            table, v, v_squared, share = activity_association(records, quote_edges)
            association = {
                "table": {
                    "row_labels": list(table.row_labels),
                    "col_labels": list(table.col_labels),
                    "counts": [list(row) for row in table.counts],
                    "n": table.n,
                },
                "v": v,
                "v_squared": v_squared,
                "comment_evaluation_share": share,
                "rejected_rows": len(rejected),
            }
        except NoPairs as exc:
            association = {"error": str(exc), "rejected_rows": len(rejected)}

    trajectories = {}
    for person in sorted(p.id for p in corpus.persons()):
        trajectory = compute_trajectory(
            corpus,
            person,
            unit=config.window_unit,
            ownership_min_revisions=config.ownership_min_revisions,
            custom_days=config.custom_window_days,
        )
        trajectories[person] = {
            "stage_timestamps": trajectory.stage_timestamps,
            "highest_stage": trajectory.highest_stage,
        }

    pep_discussions = []
    for number in sorted(discussions):
        ids = discussions[number]
        msgs = [corpus.message(mid) for mid in ids]
        authors = sorted({m.author for m in msgs})
        admin_authors = [
            a
            for a in authors
            if a in corpus.actants and corpus.actants[a].role in ADMIN_ROLES
        ]
        pep_discussions.append(
            {
                "pep": number,
                "messages": len(msgs),
                "authors": len(authors),
                "admin_authors": len(admin_authors),
                "first_at": msgs[0].sent_at if msgs else None,
                "last_at": msgs[-1].sent_at if msgs else None,
            }
        )

    return {
        "quote_stats": asdict(qstats),
        "participant_split": {"median": split.median, "classes": split.classes},
        "structure": {
            "branch_points": list(structure.branch_points),
            "chains": [list(c) for c in structure.chains],
            "leader_branch_fraction": structure.leader_branch_fraction,
            "chain_alternation": list(structure.chain_alternation),
        },
        "divergence": {
            "quote_not_reply": divergence.quote_not_reply,
            "reply_not_quote": divergence.reply_not_quote,
            "parent_set_mismatches": divergence.parent_set_mismatches,
        },
        "correlation": correlation,
        "association": association,
        "pep_discussions": pep_discussions,
        "trajectories": trajectories,
    }


def run_pipeline(config: PipelineConfig | str | Path, outdir: str | Path) -> Dataset:
    """Build the dataset and persist it atomically to outdir."""
    if not isinstance(config, PipelineConfig):
        with _stage("config"):
            config = load_config(config)
    dataset = build_dataset(config)
    with _stage("write"):
        write_dataset(dataset, outdir)
    return dataset
