"""Pipeline configuration: an INI file with [inputs] and [params] sections.

Relative paths are resolved against the config file's own directory so a
fixture tree stays relocatable.  Every parameter has a default; only the
mbox and cvs_log inputs are required.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from pathlib import Path

WINDOW_UNITS = ("month", "week", "custom")
GRANULARITIES = ("file", "directory", "project")


@dataclass(frozen=True)
class PipelineConfig:
    # (list_name, mbox_path) pairs and cvs log paths, in config order.
    mboxes: tuple[tuple[str, Path], ...]
    cvs_logs: tuple[Path, ...]
    aliases: Path | None = None
    roles: Path | None = None
    peps_dir: Path | None = None
    annotations: Path | None = None
    seed: int = 42
    window_unit: str = "month"
    custom_window_days: int = 30
    min_match_chars: int = 40
    artifact_granularity: str = "project"
    ownership_min_revisions: int = 5
    strict_pep_mode: bool = False

    def as_record(self) -> dict:
        """JSON-ready parameter record stored beside the dataset."""
        return {
            "mboxes": [[name, str(path)] for name, path in self.mboxes],
            "cvs_logs": [str(path) for path in self.cvs_logs],
            "aliases": str(self.aliases) if self.aliases else None,
            "roles": str(self.roles) if self.roles else None,
            "peps_dir": str(self.peps_dir) if self.peps_dir else None,
            "annotations": str(self.annotations) if self.annotations else None,
            "seed": self.seed,
            "window_unit": self.window_unit,
            "custom_window_days": self.custom_window_days,
            "min_match_chars": self.min_match_chars,
            "artifact_granularity": self.artifact_granularity,
            "ownership_min_revisions": self.ownership_min_revisions,
            "strict_pep_mode": self.strict_pep_mode,
        }


def _split_mbox_lines(value: str, base: Path) -> tuple[tuple[str, Path], ...]:
    # Each line is "<list_name> <path>" or a bare path whose stem names
    # the list.
    entries = []
    for line in value.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if len(parts) == 2:
            name, raw_path = parts
        else:
            raw_path = parts[0]
            name = Path(raw_path).stem
        entries.append((name, _resolve(raw_path, base)))
    return tuple(entries)


def _split_paths(value: str, base: Path) -> tuple[Path, ...]:
    return tuple(
        _resolve(line.strip(), base) for line in value.splitlines() if line.strip()
    )


def _resolve(raw: str, base: Path) -> Path:
    path = Path(raw)
    return path if path.is_absolute() else (base / path)


def load_config(path: str | Path) -> PipelineConfig:
    """Read and validate a pipeline config file."""
    path = Path(path)
    parser = configparser.ConfigParser()
    with open(path, encoding="utf-8") as handle:
        parser.read_file(handle)
    base = path.parent
    if not parser.has_section("inputs"):
        raise ValueError(f"{path}: missing [inputs] section")
    inputs = parser["inputs"]
    params = parser["params"] if parser.has_section("params") else {}

    mboxes = _split_mbox_lines(inputs.get("mbox", ""), base)
    cvs_logs = _split_paths(inputs.get("cvs_log", ""), base)
    if not mboxes:
        raise ValueError(f"{path}: [inputs] mbox is required")
    if not cvs_logs:
        raise ValueError(f"{path}: [inputs] cvs_log is required")

    def optional(key: str) -> Path | None:
        raw = inputs.get(key, "").strip()
        return _resolve(raw, base) if raw else None

    def param_int(key: str, default: int) -> int:
        raw = str(params.get(key, "")).strip() if params else ""
        return int(raw) if raw else default

    def param_str(key: str, default: str) -> str:
        raw = str(params.get(key, "")).strip() if params else ""
        return raw if raw else default

    def param_bool(key: str, default: bool) -> bool:
        raw = str(params.get(key, "")).strip().lower() if params else ""
        if not raw:
            return default
        if raw in ("1", "true", "yes", "on"):
            return True
        if raw in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"{path}: bad boolean for {key}: {raw!r}")

    config = PipelineConfig(
        mboxes=mboxes,
        cvs_logs=cvs_logs,
        aliases=optional("aliases"),
        roles=optional("roles"),
        peps_dir=optional("peps"),
        annotations=optional("annotations"),
        seed=param_int("seed", 42),
        window_unit=param_str("window_unit", "month"),
        custom_window_days=param_int("custom_window_days", 30),
        min_match_chars=param_int("min_match_chars", 40),
        artifact_granularity=param_str("artifact_granularity", "project"),
        ownership_min_revisions=param_int("ownership_min_revisions", 5),
        strict_pep_mode=param_bool("strict_pep_mode", False),
    )
    if config.window_unit not in WINDOW_UNITS:
        raise ValueError(f"{path}: window_unit must be one of {WINDOW_UNITS}")
    if config.artifact_granularity not in GRANULARITIES:
        raise ValueError(f"{path}: artifact_granularity must be one of {GRANULARITIES}")
    if config.custom_window_days <= 0 or config.min_match_chars <= 0:
        raise ValueError(f"{path}: window and match sizes must be positive")
    return config
