"""Content-addressed JSON result cache for table sweeps.

One JSON file per result, named by a hash of (library version, kind,
parameters). Values are deterministic functions of the key, so concurrent
writers clobbering each other with identical bytes is harmless; writes go
through a temp file and rename so readers never see a partial file.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

ENV_VAR = "KOSTKA_CACHE_DIR"


def resolve_cache_dir(explicit: str | None) -> Path | None:
    """Explicit flag wins, then the environment, then caching is off."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return None


def cache_key(version: str, kind: str, params: dict) -> str:
    canonical = json.dumps(
        {"version": version, "kind": kind, "params": params},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode()).hexdigest()


def load(cache_dir: Path, key: str) -> dict | None:
    path = cache_dir / f"{key}.json"
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError):
        return None


def store(cache_dir: Path, key: str, payload: dict) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"{key}.json"
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path
