"""On-disk cache of computed marks tables, keyed by group fingerprint."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .permgroup import PermGroup

CACHE_VERSION = 1
ENV_VAR = "BURNSIDE_CACHE"


def fingerprint(group: PermGroup) -> str:
    """Degree plus sorted generator images; equal strings mean equal input."""
    gens = sorted(",".join(map(str, g.images)) for g in group.generators)
    return f"{group.degree}|" + ";".join(gens)


def resolve_cache_dir(explicit: str | None = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "burnside"


def _path_for(cache_dir: Path, fp: str) -> Path:
    digest = hashlib.sha256(fp.encode()).hexdigest()[:32]
    return cache_dir / f"marks-{digest}.json"


def load_marks_json(cache_dir: Path, group: PermGroup) -> dict | None:
    """The cached marks document, or None on miss/stale/foreign entries."""
    fp = fingerprint(group)
    path = _path_for(cache_dir, fp)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if doc.get("version") != CACHE_VERSION or doc.get("fingerprint") != fp:
        return None
    return doc["marks"]


def store_marks_json(cache_dir: Path, group: PermGroup, marks: dict) -> None:
    """Write-temp-then-rename so concurrent readers never see partial files."""
    cache_dir.mkdir(parents=True, exist_ok=True)
    fp = fingerprint(group)
    doc = {"version": CACHE_VERSION, "fingerprint": fp, "marks": marks}
    payload = json.dumps(doc, sort_keys=True, indent=None, separators=(",", ":"))
    path = _path_for(cache_dir, fp)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=".marks-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
