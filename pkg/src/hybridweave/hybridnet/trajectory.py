"""Participant trajectories: from first post to module ownership.

Stage detection is rule-based.  The discussion-side stages use configurable
keyword and diff-marker heuristics; the implementation-side stages come from
the commit record.  Module ownership is evaluated cumulatively at each
window boundary: the stage fires at the earliest window end by which the
person owns at least one directory-granularity module with enough revisions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hybridweave.errors import UnknownPerson
from hybridweave.ingest.records import PERSON, Corpus
from hybridweave.hybridnet.ownership import ownership_map
from hybridweave.hybridnet.snapshot import window_spans

STAGES = (
    "first_post",
    "first_bug_report",
    "first_patch_suggestion",
    "first_commit",
    "module_ownership",
)

DEFAULT_BUG_PATTERNS = ("bug", "traceback", "crash")

DIFF_MARKERS = ("--- ", "+++ ", "@@", "Index:")


@dataclass(frozen=True)
class Trajectory:
    person: str
    stage_timestamps: dict[str, int | None]
    per_window_activity: tuple[tuple[tuple[int, int], int, int], ...]
    highest_stage: str | None


def _mentions_bug(message, patterns: Sequence[str]) -> bool:
    haystack = (message.subject + "\n" + "\n".join(message.body)).lower()
    return any(p.lower() in haystack for p in patterns)


def _contains_diff(message) -> bool:
    return any(line.startswith(DIFF_MARKERS) for line in message.body)


def compute_trajectory(
    corpus: Corpus,
    person: str,
    unit: str = "month",
    bug_patterns: Sequence[str] = DEFAULT_BUG_PATTERNS,
    ownership_min_revisions: int = 5,
    custom_days: int | None = None,
) -> Trajectory:
    actant = corpus.actants.get(person)
    if actant is None or actant.kind != PERSON:
        raise UnknownPerson(f"no person actant {person!r} in corpus")

    messages = [m for m in corpus.messages if m.author == person]
    commits = [c for c in corpus.commits if c.author == person]

    stages: dict[str, int | None] = {s: None for s in STAGES}
    if messages:
        stages["first_post"] = messages[0].sent_at
        for m in messages:
            if stages["first_bug_report"] is None and _mentions_bug(m, bug_patterns):
                stages["first_bug_report"] = m.sent_at
            if stages["first_patch_suggestion"] is None and _contains_diff(m):
                stages["first_patch_suggestion"] = m.sent_at
            if stages["first_bug_report"] is not None and stages["first_patch_suggestion"] is not None:
                break
    if commits:
        stages["first_commit"] = commits[0].committed_at

    spans = window_spans(corpus, unit, custom_days)
    if commits:
        for _, end in spans:
            upto = [c for c in corpus.commits if c.committed_at < end]
            owned = ownership_map(upto, "directory", ownership_min_revisions)
            if any(e.owner == person for e in owned.entries.values()):
                stages["module_ownership"] = end
                break

    activity = tuple(
        (
            span,
            sum(1 for m in messages if span[0] <= m.sent_at < span[1]),
            sum(1 for c in commits if span[0] <= c.committed_at < span[1]),
        )
        for span in spans
    )

    highest = None
    for s in STAGES:
        if stages[s] is not None:
            highest = s
    return Trajectory(
        person=person,
        stage_timestamps=stages,
        per_window_activity=activity,
        highest_stage=highest,
    )
