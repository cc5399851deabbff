"""Shared fixtures and corpus builders for the test suite."""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from hybridweave.ingest.identity import resolve_identities
from hybridweave.ingest.records import CommitRecord, Message

FIXTURES = Path(__file__).parent / "fixtures"
GOLDENS = Path(__file__).parent / "goldens"

# Acceptance tests append "[PASS] ..." lines here; the terminal summary
# hook below prints them after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_message(
    message_id: str,
    author_raw: str,
    sent_at: int,
    subject: str = "subject",
    body: tuple[str, ...] | list[str] = (),
    in_reply_to: str | None = None,
    references: tuple[str, ...] = (),
    source_list: str = "test-list",
) -> Message:
    return Message(
        message_id=message_id,
        author_raw=author_raw,
        sent_at=sent_at,
        subject=subject,
        in_reply_to=in_reply_to,
        references=tuple(references),
        body=tuple(body),
        source_list=source_list,
    )


def make_commit(
    file_path: str,
    revision: str,
    author_raw: str,
    committed_at: int,
    lines_added: int = 1,
    lines_removed: int = 0,
    log_message: str = "log",
) -> CommitRecord:
    return CommitRecord(
        file_path=file_path,
        revision=revision,
        author_raw=author_raw,
        committed_at=committed_at,
        lines_added=lines_added,
        lines_removed=lines_removed,
        log_message=log_message,
    )


def make_corpus(messages, commits=(), alias_table=None, roles_table=None):
    return resolve_identities(messages, commits, alias_table, roles_table)


def check_golden(name: str, content: str) -> None:
    """Compare content against a stored golden file.

    Set REGEN_GOLDENS=1 to (re)write the goldens instead of comparing.
    """
    path = GOLDENS / name
    if os.environ.get("REGEN_GOLDENS"):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        return
    assert path.exists(), f"golden {name} missing; rerun with REGEN_GOLDENS=1"
    assert content == path.read_text(encoding="utf-8"), f"golden mismatch: {name}"


@pytest.fixture(scope="session")
def mini_dataset_dir(tmp_path_factory) -> Path:
    """The mini fixture pipeline output, built once per session."""
    from hybridweave.pipeline import run_pipeline

    out = tmp_path_factory.mktemp("dataset") / "mini"
    run_pipeline(FIXTURES / "mini" / "config.ini", out)
    return out


@pytest.fixture(scope="session")
def mini_dataset():
    """The mini fixture's in-memory dataset, built once per session."""
    from hybridweave.config import load_config
    from hybridweave.pipeline import build_dataset

    return build_dataset(load_config(FIXTURES / "mini" / "config.ini"))
