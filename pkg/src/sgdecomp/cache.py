"""On-disk result cache with checksums; corruption degrades to a miss.

Entries are JSON files named by the sha256 of their canonical key, which
includes the field identity (p, n, modulus), the subcommand, its parameters
and a format version.  Payloads carry their own checksum; any mismatch,
parse failure or version skew makes the entry invisible, so the worst a
damaged cache can do is force recomputation.  Writers serialize through a
per-directory lockfile.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
from pathlib import Path

CACHE_ENV = "SGDECOMP_CACHE_DIR"
CACHE_VERSION = 1


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "sgdecomp"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(p: int, n: int, modulus, subcommand: str, params: dict) -> str:
    raw = _canonical([p, n, list(modulus), subcommand, params, CACHE_VERSION])
    return hashlib.sha256(raw.encode()).hexdigest()


def _entry_path(key: str) -> Path:
    return cache_dir() / f"{key}.json"


def cache_get(key: str):
    """Payload for key, or None on miss/corruption/version mismatch."""
    path = _entry_path(key)
    try:
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
        if entry.get("version") != CACHE_VERSION:
            return None
        payload = entry["payload"]
        digest = hashlib.sha256(_canonical(payload).encode()).hexdigest()
        if digest != entry.get("checksum"):
            return None
        return payload
    except (OSError, ValueError, KeyError, TypeError, AttributeError):
        return None


def cache_put(key: str, payload) -> Path | None:
    """Store payload under key; I/O trouble is swallowed (cache is advisory)."""
    base = cache_dir()
    path = _entry_path(key)
    try:
        base.mkdir(parents=True, exist_ok=True)
        entry = {
            "version": CACHE_VERSION,
            "checksum": hashlib.sha256(_canonical(payload).encode()).hexdigest(),
            "payload": payload,
        }
        lock_path = base / ".lock"
        with open(lock_path, "w") as lock:
            fcntl.flock(lock, fcntl.LOCK_EX)
            try:
                tmp = path.with_suffix(".tmp")
                tmp.write_text(_canonical(entry), encoding="utf-8")
                os.replace(tmp, path)
            finally:
                fcntl.flock(lock, fcntl.LOCK_UN)
        return path
    except OSError:
        return None
