"""Identity resolution: merge author spellings into person actants.

Merging is deliberately conservative: identical canonical email addresses
merge automatically, but an email author and a VCS username are never merged
unless the user-supplied alias table says so.  A false merge would corrupt
every downstream metric; a missed merge only splits one person in two.
"""

from __future__ import annotations

from dataclasses import replace
from email.utils import parseaddr
from typing import IO, Iterable, Mapping

from hybridweave.errors import AliasConflict
from hybridweave.ingest.records import (
    PERSON,
    ROLES,
    Actant,
    CommitRecord,
    Corpus,
    Message,
)


def canonical_key(author_raw: str) -> str:
    """Canonical identity key for a raw author string.

    Email addresses are lowercased and stripped of any ``+tag`` local-part
    suffix; bare VCS usernames are lowercased.
    """
    name, addr = parseaddr(author_raw)
    token = addr or author_raw.strip()
    token = token.strip().lower()
    if "@" in token:
        local, _, domain = token.partition("@")
        local = local.split("+", 1)[0]
        token = f"{local}@{domain}"
    return token


def display_name(author_raw: str) -> str:
    name, addr = parseaddr(author_raw)
    return name.strip() or addr.strip() or author_raw.strip()


def raw_address(author_raw: str) -> str:
    """The address/username part of a raw author string, spelling preserved."""
    name, addr = parseaddr(author_raw)
    return addr.strip() or author_raw.strip()


def _read_tsv(stream: IO[str] | str) -> list[tuple[str, str, int]]:
    text = stream if isinstance(stream, str) else stream.read()
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        left, sep, right = line.partition("\t")
        if not sep or not left.strip() or not right.strip():
            raise ValueError(f"line {lineno}: expected two tab-separated columns")
        rows.append((left.strip(), right.strip(), lineno))
    return rows


def load_alias_table(stream: IO[str] | str) -> dict[str, str]:
    """Load ``alias TAB canonical`` rows; alias keys are canonicalized.

    Raises AliasConflict if one (canonicalized) alias maps to two different
    canonical tokens.
    """
    table: dict[str, str] = {}
    for alias, canonical, lineno in _read_tsv(stream):
        key = canonical_key(alias)
        if key in table and table[key] != canonical:
            raise AliasConflict(
                f"alias {alias!r} (line {lineno}) maps to both "
                f"{table[key]!r} and {canonical!r}"
            )
        table[key] = canonical
    return table


def load_roles_table(stream: IO[str] | str) -> dict[str, str]:
    """Load ``canonical TAB role`` rows."""
    table: dict[str, str] = {}
    for canonical, role, lineno in _read_tsv(stream):
        if role not in ROLES:
            raise ValueError(f"line {lineno}: unknown role {role!r} (expected one of {ROLES})")
        table[canonical] = role
    return table


def resolve_identities(
    messages: Iterable[Message],
    commits: Iterable[CommitRecord],
    alias_table: Mapping[str, str] | None = None,
    roles_table: Mapping[str, str] | None = None,
    roles_source: str = "",
) -> Corpus:
    """Build an identity-resolved Corpus.

    Every author resolves to a person actant.  Authors covered by the alias
    table get the table's canonical token as their actant id; everyone else
    gets a fresh ``p:<canonical key>`` actant with role looked up in the
    roles table (default "unknown").
    """
    aliases: dict[str, str] = {}
    for raw_alias, canonical in (alias_table or {}).items():
        key = canonical_key(raw_alias)
        if key in aliases and aliases[key] != canonical:
            raise AliasConflict(
                f"alias {raw_alias!r} maps to both {aliases[key]!r} and {canonical!r}"
            )
        aliases[key] = canonical
    roles = dict(roles_table or {})

    labels: dict[str, str] = {}
    raw_forms: dict[str, set[str]] = {}

    def actant_id(author_raw: str) -> str:
        key = canonical_key(author_raw)
        aid = aliases.get(key, "p:" + key)
        raw_forms.setdefault(aid, set()).add(raw_address(author_raw))
        if aid not in labels:
            name = display_name(author_raw)
            if name:
                labels[aid] = name
        return aid

    # Resolve in corpus order so the first-seen display name is deterministic.
    resolved_messages = [
        replace(m, author=actant_id(m.author_raw))
        for m in sorted(messages, key=Message.sort_key)
    ]
    resolved_commits = [
        replace(c, author=actant_id(c.author_raw))
        for c in sorted(commits, key=CommitRecord.sort_key)
    ]

    def role_for(aid: str) -> str:
        if aid in roles:
            return roles[aid]
        if aid.startswith("p:") and aid[2:] in roles:
            return roles[aid[2:]]
        return "unknown"

    actants = {
        aid: Actant(
            id=aid,
            kind=PERSON,
            label=labels.get(aid, aid),
            aliases=tuple(sorted(raw_forms[aid])),
            role=role_for(aid),
        )
        for aid in sorted(raw_forms)
    }
    return Corpus(
        messages=tuple(resolved_messages),
        commits=tuple(resolved_commits),
        actants=actants,
        roles_source=roles_source,
    )
