"""Correlation between the implementation space and the discussion space.

For every pair of persons active in both spaces, the co-commit matrix counts
directory-modules both have touched and the co-discussion matrix counts
reply-graph threads both have posted in.  The report carries the Pearson
correlation of the two strictly-upper-triangle vectors.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from hybridweave.errors import InsufficientOverlap, InsufficientVariance
from hybridweave.ingest.records import Corpus
from hybridweave.hybridnet.ownership import module_key
from hybridweave.quotegraph.threads import ThreadGraph, build_reply_graph, split_threads


@dataclass(frozen=True)
class CorrelationReport:
    correlation: float
    n_persons: int
    n_modules: int
    n_threads: int


def structure_correlation(
    corpus: Corpus, reply_graph: ThreadGraph | None = None
) -> CorrelationReport:
    """Pearson correlation between co-commit and co-discussion counts.

    Raises InsufficientOverlap with fewer than three persons active in both
    spaces, and InsufficientVariance when either vector is constant.
    """
    message_authors = {m.author for m in corpus.messages}
    commit_authors = {c.author for c in corpus.commits}
    persons = sorted(message_authors & commit_authors)
    if len(persons) < 3:
        raise InsufficientOverlap(
            f"need >= 3 persons active in both spaces, found {len(persons)}"
        )

    modules_of = {p: set() for p in persons}
    for c in corpus.commits:
        if c.author in modules_of:
            modules_of[c.author].add(module_key(c.file_path, "directory"))

    if reply_graph is None:
        reply_graph = build_reply_graph(corpus)
    threads = split_threads(reply_graph, corpus)
    threads_of = {p: set() for p in persons}
    for t in threads:
        for mid in t.message_ids:
            author = corpus.message(mid).author
            if author in threads_of:
                threads_of[author].add(t.thread_id)

    co_commit: list[float] = []
    co_discuss: list[float] = []
    for i, a in enumerate(persons):
        for b in persons[i + 1:]:
            co_commit.append(float(len(modules_of[a] & modules_of[b])))
            co_discuss.append(float(len(threads_of[a] & threads_of[b])))

    try:
        r = statistics.correlation(co_commit, co_discuss)
    except statistics.StatisticsError as exc:
        raise InsufficientVariance(str(exc)) from exc

    all_modules = set().union(*modules_of.values()) if modules_of else set()
    all_threads = set().union(*threads_of.values()) if threads_of else set()
    return CorrelationReport(
        correlation=r,
        n_persons=len(persons),
        n_modules=len(all_modules),
        n_threads=len(all_threads),
    )
