"""Archive ingestion: mbox mail, CVS-style logs, identity resolution."""

from hybridweave.ingest.records import Actant, CommitRecord, Corpus, Message
from hybridweave.ingest.mbox import parse_mbox
from hybridweave.ingest.cvslog import parse_cvs_log
from hybridweave.ingest.identity import (
    canonical_key,
    load_alias_table,
    load_roles_table,
    resolve_identities,
)

__all__ = [
    "Actant",
    "CommitRecord",
    "Corpus",
    "Message",
    "parse_mbox",
    "parse_cvs_log",
    "canonical_key",
    "load_alias_table",
    "load_roles_table",
    "resolve_identities",
]
