"""Read-only HTTP API over a written dataset directory.

The whole dataset is loaded into memory at startup and never mutated;
any number of readers can hit the service concurrently.  Reloading (for
a refreshed dataset directory) swaps the in-memory snapshot atomically
and is wired to SIGHUP by serve_api.
"""

from __future__ import annotations

import logging
import signal
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from hybridweave.dataset import load_dataset

logger = logging.getLogger(__name__)


class _Indexed:
    """Immutable dataset view with the per-endpoint lookup tables."""

    def __init__(self, loaded: dict):
        self.config = loaded["config"]
        self.report = loaded["report"]
        self.snapshots = loaded["snapshots"]
        self.actors = {a["id"]: a for a in loaded["actors"]}
        self.threads = {t["id"]: t for t in loaded["threads"]}
        self.peps = loaded["peps"]
        self.peps_by_number = {p["number"]: p for p in loaded["peps"]}
        self.messages_by_author: dict[str, list[dict]] = {}
        for m in loaded["messages"]:
            self.messages_by_author.setdefault(m["author"], []).append(m)
        self.commits_by_author: dict[str, list[dict]] = {}
        self.commits_by_artifact: dict[str, list[dict]] = {}
        for c in loaded["commits"]:
            self.commits_by_author.setdefault(c["author"], []).append(c)
            self.commits_by_artifact.setdefault(c["artifact"], []).append(c)
        # Artifact ids are legal actor ids for the drill-down endpoints.
        self.known_ids = set(self.actors) | set(self.commits_by_artifact)
        for s in self.snapshots:
            self.known_ids.update(n["id"] for n in s["nodes"])


def _parse_index(raw: str, what: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"malformed {what}: {raw!r}")


def _parse_until(raw: str | None) -> int | None:
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise HTTPException(
            status_code=400, detail=f"malformed until timestamp: {raw!r}"
        )


def create_app(dataset_dir: str | Path) -> FastAPI:
    dataset_dir = Path(dataset_dir)
    app = FastAPI(title="hybridweave", docs_url=None, redoc_url=None)
    # The explorer is usually served from a different origin (a static file
    # server) than the API; the data is read-only, so open CORS is safe.
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )
    app.state.dataset_dir = dataset_dir
    app.state.data = _Indexed(load_dataset(dataset_dir))

    def reload_dataset() -> None:
        app.state.data = _Indexed(load_dataset(dataset_dir))
        logger.info("dataset reloaded from %s", dataset_dir)

    app.state.reload_dataset = reload_dataset

    @app.get("/snapshots")
    def list_snapshots():
        data = app.state.data
        return [
            {
                "index": i,
                "start": s["window"]["start"],
                "end": s["window"]["end"],
            }
            for i, s in enumerate(data.snapshots)
        ]

    @app.get("/snapshots/{index}")
    def get_snapshot(index: str):
        data = app.state.data
        i = _parse_index(index, "snapshot index")
        if not 0 <= i < len(data.snapshots):
            raise HTTPException(status_code=404, detail=f"no snapshot {i}")
        return data.snapshots[i]

    @app.get("/actors/{actor_id}/messages")
    def actor_messages(actor_id: str, until: str | None = None):
        data = app.state.data
        until_ts = _parse_until(until)
        if actor_id not in data.known_ids:
            raise HTTPException(status_code=404, detail=f"unknown actor {actor_id!r}")
        items = [
            m
            for m in data.messages_by_author.get(actor_id, [])
            if until_ts is None or m["sent_at"] <= until_ts
        ]
        return {"actor": actor_id, "until": until_ts, "items": items}

    @app.get("/actors/{actor_id}/commits")
    def actor_commits(actor_id: str, until: str | None = None):
        data = app.state.data
        until_ts = _parse_until(until)
        if actor_id not in data.known_ids:
            raise HTTPException(status_code=404, detail=f"unknown actor {actor_id!r}")
        # Person ids list authored commits; artifact ids list commits
        # touching the artifact.
        pool = data.commits_by_author.get(actor_id)
        if pool is None and actor_id in data.commits_by_artifact:
            pool = data.commits_by_artifact[actor_id]
        items = [
            c
            for c in (pool or [])
            if until_ts is None or c["committed_at"] <= until_ts
        ]
        return {"actor": actor_id, "until": until_ts, "items": items}

    @app.get("/threads/{thread_id}")
    def get_thread(thread_id: str):
        data = app.state.data
        thread = data.threads.get(thread_id)
        if thread is None:
            raise HTTPException(status_code=404, detail=f"unknown thread {thread_id!r}")
        return thread

    @app.get("/peps")
    def list_peps():
        return app.state.data.peps

    @app.get("/peps/{number}")
    def get_pep(number: str):
        data = app.state.data
        n = _parse_index(number, "PEP number")
        pep = data.peps_by_number.get(n)
        if pep is None:
            raise HTTPException(status_code=404, detail=f"unknown PEP {n}")
        return pep

    @app.get("/reports")
    def get_reports():
        return app.state.data.report

    return app


def serve_api(dataset_dir: str | Path, bind: str = "127.0.0.1:8000") -> None:
    """Run the service until interrupted; SIGHUP reloads the dataset."""
    import uvicorn

    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValueError(f"bind address must be HOST:PORT, got {bind!r}")
    app = create_app(dataset_dir)
    if hasattr(signal, "SIGHUP"):
        signal.signal(signal.SIGHUP, lambda *_: app.state.reload_dataset())
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
