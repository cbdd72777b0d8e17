"""On-disk manifest cache so long pipelines are resumable.

Entries are JSON files keyed by pipeline id plus a content digest of the
parameters and seed data version. The directory defaults to .mdeg-cache in
the working directory and is overridden by the MDEG_CACHE_DIR environment
variable or an explicit cache_dir argument.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .errors import IoError

ENV_VAR = "MDEG_CACHE_DIR"
DEFAULT_DIR = ".mdeg-cache"


def cache_dir(explicit=None) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


def _key_path(root: Path, name: str, params: dict) -> Path:
    blob = json.dumps(params, sort_keys=True)
    digest = hashlib.sha256(blob.encode()).hexdigest()[:24]
    return root / f"{name}-{digest}.json"


def load(name: str, params: dict, explicit_dir=None):
    path = _key_path(cache_dir(explicit_dir), name, params)
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise IoError(f"corrupt cache entry {path}: {exc}") from exc


def store(name: str, params: dict, payload, explicit_dir=None) -> Path:
    root = cache_dir(explicit_dir)
    try:
        root.mkdir(parents=True, exist_ok=True)
        path = _key_path(root, name, params)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        tmp.replace(path)
    except OSError as exc:
        raise IoError(f"cannot write cache under {root}: {exc}") from exc
    return path


def stat(explicit_dir=None) -> dict:
    root = cache_dir(explicit_dir)
    if not root.exists():
        return {"dir": str(root), "entries": 0, "bytes": 0}
    files = sorted(root.glob("*.json"))
    return {
        "dir": str(root),
        "entries": len(files),
        "bytes": sum(f.stat().st_size for f in files),
        "names": [f.name for f in files],
    }


def gc(explicit_dir=None) -> int:
    root = cache_dir(explicit_dir)
    if not root.exists():
        return 0
    removed = 0
    for f in root.glob("*.json"):
        try:
            f.unlink()
            removed += 1
        except OSError as exc:
            raise IoError(f"cannot remove {f}: {exc}") from exc
    return removed
