"""Command line entry points.

    hybridweave run   -c config.ini -o outdir
    hybridweave export --xml -d outdir [-o file]
    hybridweave serve -d outdir --bind HOST:PORT
    hybridweave stats -d outdir --pep N

HYBRIDWEAVE_LOG sets the log level (default WARNING); everything else is
config-file or flag driven.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from hybridweave.dataset import load_dataset
from hybridweave.errors import HybridweaveError
from hybridweave.ingest.records import ADMIN_ROLES
from hybridweave.pepmodel import token_pattern
from hybridweave.quotegraph.statistics import HIST_BUCKETS, bucket_label
from hybridweave.xmlexport import corpus_xml_from_json


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridweave",
        description="Rebuild a project's hybrid socio-technical network "
        "from its mailing list and version control archives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run the full pipeline")
    run_p.add_argument("-c", "--config", required=True, help="pipeline config file")
    run_p.add_argument("-o", "--output", required=True, help="dataset output directory")

    export_p = sub.add_parser("export", help="export a dataset")
    export_p.add_argument("--xml", action="store_true", help="emit the canonical XML")
    export_p.add_argument("-d", "--dataset", required=True, help="dataset directory")
    export_p.add_argument("-o", "--output", default="-", help="output file, - for stdout")

    serve_p = sub.add_parser("serve", help="serve a dataset over HTTP")
    serve_p.add_argument("-d", "--dataset", required=True, help="dataset directory")
    serve_p.add_argument("--bind", default="127.0.0.1:8000", help="HOST:PORT")

    stats_p = sub.add_parser("stats", help="print replication statistics")
    stats_p.add_argument("-d", "--dataset", required=True, help="dataset directory")
    stats_p.add_argument("--pep", type=int, required=True, help="PEP number")
    return parser


def _cmd_run(args) -> int:
    from hybridweave.pipeline import run_pipeline

    run_pipeline(args.config, args.output)
    return 0


def _cmd_export(args) -> int:
    if not args.xml:
        print("hybridweave: export currently supports --xml only", file=sys.stderr)
        return 2
    data = load_dataset(args.dataset)
    text = corpus_xml_from_json(
        data["actors"], data["messages"], data["commits"], data["peps"]
    )
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


def _cmd_serve(args) -> int:
    from hybridweave.api import serve_api

    serve_api(args.dataset, args.bind)
    return 0


def _discussion_ids(data: dict, pep_number: int) -> list[str]:
    """Discussion set for a PEP, from peps.json when present, otherwise
    recomputed from subjects and reply parents."""
    for pep in data["peps"]:
        if pep["number"] == pep_number:
            return list(pep["discussion"])
    pattern = token_pattern(pep_number)
    linked = {m["id"] for m in data["messages"] if pattern.search(m["subject"])}
    grew = True
    while grew:
        grew = False
        for m in data["messages"]:
            if m["id"] not in linked and m["reply_parent"] in linked:
                linked.add(m["id"])
                grew = True
    return [m["id"] for m in data["messages"] if m["id"] in linked]


def _cmd_stats(args) -> int:
    data = load_dataset(args.dataset)
    ids = _discussion_ids(data, args.pep)
    selected = set(ids)
    messages = [m for m in data["messages"] if m["id"] in selected]
    roles = {a["id"]: a["role"] for a in data["actors"]}
    authors = sorted({m["author"] for m in messages})
    admin_authors = [a for a in authors if roles.get(a) in ADMIN_ROLES]

    citers: dict[str, set[str]] = {m["id"]: set() for m in messages}
    for m in messages:
        for quote in m["quotes"]:
            cited = quote["cited"]
            if quote["resolution"] != "unresolved" and cited in citers:
                citers[cited].add(m["id"])
    n = len(messages)
    hist = {bucket: 0 for bucket in HIST_BUCKETS}
    for cited_by in citers.values():
        hist[bucket_label(len(cited_by))] += 1
    out = {
        "pep": args.pep,
        "messages": n,
        "authors": len(authors),
        "admin_authors": len(admin_authors),
        "first_at": messages[0]["sent_at"] if messages else None,
        "last_at": messages[-1]["sent_at"] if messages else None,
        "frac_with_quote": (
            sum(1 for m in messages if m["quotes"]) / n if n else None
        ),
        "quoted_by_hist": (
            {bucket: count / n for bucket, count in hist.items()} if n else None
        ),
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("HYBRIDWEAVE_LOG", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    args = _build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "export": _cmd_export,
        "serve": _cmd_serve,
        "stats": _cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except HybridweaveError as exc:
        print(f"hybridweave: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"hybridweave: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"hybridweave: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
