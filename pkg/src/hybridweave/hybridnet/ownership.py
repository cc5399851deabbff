"""Ownership architecture: which person dominates each code module."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from hybridweave.ingest.records import CommitRecord


@dataclass(frozen=True)
class OwnershipEntry:
    owner: str
    owner_share: float  # owner's revisions / module revisions, in (0, 1]
    revision_count: int


@dataclass(frozen=True)
class OwnershipMap:
    granularity: str  # "file" | "directory"
    entries: dict[str, OwnershipEntry]


def module_key(file_path: str, granularity: str) -> str:
    path = file_path.lstrip("/")
    if granularity == "file":
        return path
    if granularity == "directory":
        return path.split("/", 1)[0]
    raise ValueError(f"unknown ownership granularity {granularity!r}")


def ownership_map(
    commits: Iterable[CommitRecord],
    granularity: str = "directory",
    min_revisions: int = 1,
) -> OwnershipMap:
    """Dominant committer per module; ties go to the lexicographically
    smaller actant id.  Modules with fewer than ``min_revisions`` revisions
    are dropped."""
    per_module: dict[str, Counter[str]] = {}
    for c in commits:
        author = c.author or c.author_raw
        per_module.setdefault(module_key(c.file_path, granularity), Counter())[author] += 1

    entries: dict[str, OwnershipEntry] = {}
    for module in sorted(per_module):
        counts = per_module[module]
        total = sum(counts.values())
        if total < min_revisions:
            continue
        best = max(counts.values())
        owner = min(a for a, n in counts.items() if n == best)
        entries[module] = OwnershipEntry(owner=owner, owner_share=best / total,
                                         revision_count=total)
    return OwnershipMap(granularity=granularity, entries=entries)
