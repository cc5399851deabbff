"""Seeded random input generators.

Each generator takes a ``random.Random`` and returns raw input plus the
ground truth needed to check the parse, so round-trip tests never depend on
the code under test for their expectations.
"""

from __future__ import annotations

import random
from datetime import datetime, timezone
from email.utils import formatdate

from conftest import make_commit, make_corpus, make_message

WORDS = (
    "alpha bravo charlie delta echo foxtrot golf hotel india juliet kilo lima "
    "mike november oscar papa quebec romeo sierra tango uniform victor whiskey "
    "xray yankee zulu ember quartz meadow harbor lantern summit canyon drift "
    "pillar orchard velvet timber cobalt marble signal hollow prairie"
).split()

PEOPLE = (
    ("Alice Dev", "alice@example.org"),
    ("Bob Hacker", "bob@example.org"),
    ("Carol Core", "carol@example.net"),
    ("Dan Ports", "dan@example.com"),
    ("Erin Libs", "erin@example.org"),
    ("Frank Docs", "frank@example.net"),
)

CVS_USERS = ("alice", "bob", "carol", "dan", "erin")

FILE_POOL = (
    "Lib/sre.py",
    "Lib/string.py",
    "Lib/test/test_sre.py",
    "Modules/gcmodule.c",
    "Modules/mathmodule.c",
    "Doc/lib/libos.tex",
    "Misc/NEWS",
)


def words(rng: random.Random, n: int) -> str:
    return " ".join(rng.choice(WORDS) for _ in range(n))


def body_line(rng: random.Random, tag: str) -> str:
    # The tag keeps most lines unique so brute-force matching stays sharp.
    return f"{words(rng, rng.randint(3, 7))} {tag}"


def gen_mbox(rng: random.Random, n: int = 50) -> tuple[bytes, list[dict]]:
    """An mbox blob plus the expected Message fields, in file order."""
    parts: list[str] = []
    truth: list[dict] = []
    ts = 1015000000
    prev_ids: list[str] = []
    for i in range(n):
        name, addr = rng.choice(PEOPLE)
        ts += rng.randint(61, 9000)
        msgid = f"gen{i}@example.org"
        subject = f"{words(rng, 3)} #{i}"
        body = [body_line(rng, f"b{i}.{j}") for j in range(rng.randint(2, 6))]
        in_reply_to = None
        references: tuple[str, ...] = ()
        if prev_ids and rng.random() < 0.5:
            in_reply_to = rng.choice(prev_ids)
            references = (in_reply_to,)
        headers = [
            f"From {addr} {formatdate(ts, usegmt=True)}",
            f"From: {name} <{addr}>",
            f"Date: {formatdate(ts, usegmt=True)}",
            f"Subject: {subject}",
            f"Message-ID: <{msgid}>",
        ]
        if in_reply_to:
            headers.append(f"In-Reply-To: <{in_reply_to}>")
            headers.append(f"References: <{in_reply_to}>")
        parts.append("\n".join(headers) + "\n\n" + "\n".join(body) + "\n")
        truth.append(
            {
                "message_id": msgid,
                "author_raw": f"{name} <{addr}>",
                "sent_at": ts,
                "subject": subject,
                "in_reply_to": in_reply_to,
                "references": references,
                "body": tuple(body),
            }
        )
        prev_ids.append(msgid)
    return "".join(parts).encode("utf-8"), truth


def _cvs_date(ts: int) -> str:
    return datetime.fromtimestamp(ts, tz=timezone.utc).strftime("%Y/%m/%d %H:%M:%S")


def gen_cvs_log(rng: random.Random, n_files: int = 4, max_revs: int = 5) -> tuple[str, list[dict]]:
    """A `cvs log` text plus the expected CommitRecord fields (unsorted)."""
    parts: list[str] = []
    truth: list[dict] = []
    files = rng.sample(FILE_POOL, n_files)
    for path in files:
        n_revs = rng.randint(1, max_revs)
        base = 1015000000 + rng.randint(0, 5_000_000)
        stamps = sorted(rng.sample(range(base, base + 3_000_000, 97), n_revs))
        parts.append(f"RCS file: /cvsroot/proj/{path},v\n")
        parts.append(f"Working file: {path}\n")
        parts.append(f"head: 1.{n_revs}\n")
        parts.append("description:\n")
        for k in range(n_revs, 0, -1):  # newest first, as cvs prints them
            author = rng.choice(CVS_USERS)
            ts = stamps[k - 1]
            added, removed = rng.randint(0, 40), rng.randint(0, 40)
            log = words(rng, rng.randint(2, 6))
            parts.append("----------------------------\n")
            parts.append(f"revision 1.{k}\n")
            if k == 1:
                parts.append(f"date: {_cvs_date(ts)};  author: {author};  state: Exp;\n")
                added = removed = 0
                log = "Initial revision"
            else:
                parts.append(
                    f"date: {_cvs_date(ts)};  author: {author};  state: Exp;"
                    f"  lines: +{added} -{removed}\n"
                )
            parts.append(log + "\n")
            truth.append(
                {
                    "file_path": path,
                    "revision": f"1.{k}",
                    "author_raw": author,
                    "committed_at": ts,
                    "lines_added": added,
                    "lines_removed": removed,
                    "log_message": log,
                }
            )
        parts.append("=" * 77 + "\n")
    return "".join(parts), truth


def gen_quote_corpus(rng: random.Random, n: int = 30):
    """A corpus whose later messages quote earlier ones in assorted ways.

    Produces eligible multi-line quotes, ineligible one-liners, fabricated
    (unresolvable) quotes, nested re-quotes, and a mix of reply headers, so
    resolution tie-break paths all get exercised.  Expected edges come from
    the brute-force oracle, not from this generator.
    """
    messages = []
    ts = 1018000000
    for i in range(n):
        name, addr = rng.choice(PEOPLE)
        ts += rng.randint(120, 7200)
        body: list[str] = [body_line(rng, f"q{i}.0")]
        in_reply_to = None
        if messages and rng.random() < 0.8:
            source = rng.choice(messages)
            roll = rng.random()
            if roll < 0.15:
                # Fabricated quote: long enough to qualify, matches nothing.
                quoted = [body_line(rng, f"fake{i}.{j}") for j in range(2)]
            elif roll < 0.3:
                # One short line below the match threshold: ineligible.
                quoted = [rng.choice(WORDS)]
            else:
                src_body = source.body
                start = rng.randrange(len(src_body))
                count = rng.randint(1, min(3, len(src_body) - start))
                quoted = list(src_body[start:start + count])
            if rng.random() < 0.4:
                body.append(f"{source.author_raw} wrote:")
            body.extend("> " + q for q in quoted)
            body.append(body_line(rng, f"q{i}.c"))
            header_roll = rng.random()
            if header_roll < 0.5:
                in_reply_to = source.message_id
            elif header_roll < 0.7 and len(messages) > 1:
                in_reply_to = rng.choice(messages).message_id
        body.append(body_line(rng, f"q{i}.z"))
        messages.append(
            make_message(
                message_id=f"qc{i}@example.org",
                author_raw=f"{name} <{addr}>",
                sent_at=ts,
                subject=f"quote corpus #{i}",
                body=tuple(body),
                in_reply_to=in_reply_to,
            )
        )
    return make_corpus(messages)


def gen_activity_corpus(rng: random.Random, n_messages: int = 40, n_commits: int = 25):
    """A corpus with reply threads and commits spread over several months."""
    messages = []
    ts = 1012300000
    for i in range(n_messages):
        name, addr = rng.choice(PEOPLE)
        ts += rng.randint(3600, 400000)
        in_reply_to = None
        if messages and rng.random() < 0.6:
            in_reply_to = rng.choice(messages).message_id
        messages.append(
            make_message(
                message_id=f"act{i}@example.org",
                author_raw=f"{name} <{addr}>",
                sent_at=ts,
                subject=f"activity #{i}",
                body=(body_line(rng, f"a{i}"),),
                in_reply_to=in_reply_to,
            )
        )
    commits = []
    ts = 1012300000
    for i in range(n_commits):
        ts += rng.randint(3600, 500000)
        commits.append(
            make_commit(
                file_path=rng.choice(FILE_POOL),
                revision=f"1.{i + 1}",
                author_raw=rng.choice(CVS_USERS),
                committed_at=ts,
                lines_added=rng.randint(0, 30),
                lines_removed=rng.randint(0, 30),
            )
        )
    return make_corpus(messages, commits)
