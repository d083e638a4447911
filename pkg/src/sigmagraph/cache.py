"""Content-addressed on-disk cache for generating-pair matrices and graph summaries.

An entry lives at ``<dir>/<key[:2]>/<key>.entry`` where ``key`` is the sha256
of the group's canonical table bytes.  The file is a one-line header carrying
the sha256 of the payload, followed by the payload.  Entries whose checksum
does not match are treated as misses and overwritten on the next put.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import shutil
from pathlib import Path

from .graphs import adjacency_hex, generating_pair_rows, rows_from_hex
from .groups import GroupTable

log = logging.getLogger(__name__)

ENV_VAR = "SIGMAGRAPH_CACHE_DIR"
MAGIC = b"sigmagraph-cache-v1"


class CacheError(OSError):
    pass


def resolve_cache_dir(flag: str | None = None) -> Path | None:
    """The --cache-dir flag wins over the environment; None disables caching."""
    raw = flag if flag else os.environ.get(ENV_VAR)
    return Path(raw) if raw else None


def entry_path(cache_dir: Path, key: str) -> Path:
    if len(key) != 64 or any(c not in "0123456789abcdef" for c in key):
        raise ValueError(f"malformed cache key {key!r}")
    return Path(cache_dir) / key[:2] / f"{key}.entry"


def cache_put(cache_dir: Path, key: str, payload: bytes) -> Path:
    path = entry_path(cache_dir, key)
    digest = hashlib.sha256(payload).hexdigest().encode()
    tmp = path.with_suffix(".tmp")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(tmp, "wb") as fh:
            fh.write(MAGIC + b" " + digest + b"\n")
            fh.write(payload)
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheError(f"cannot write cache entry {path}: {exc}") from exc
    return path


def cache_get(cache_dir: Path, key: str) -> bytes | None:
    """Payload bytes, or None on a miss or a corrupted entry."""
    path = entry_path(cache_dir, key)
    if not path.exists():
        return None
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise CacheError(f"cannot read cache entry {path}: {exc}") from exc
    head, sep, payload = raw.partition(b"\n")
    parts = head.split(b" ")
    if not sep or len(parts) != 2 or parts[0] != MAGIC:
        log.warning("cache entry %s has a bad header; ignoring", path)
        return None
    if hashlib.sha256(payload).hexdigest().encode() != parts[1]:
        log.warning("cache entry %s failed its checksum; ignoring", path)
        return None
    return payload


def cache_info(cache_dir: Path) -> dict:
    entries = sorted(Path(cache_dir).glob("*/*.entry")) if Path(cache_dir).exists() else []
    return {
        "dir": str(cache_dir),
        "entries": len(entries),
        "bytes": sum(p.stat().st_size for p in entries),
    }


def cache_clear(cache_dir: Path) -> int:
    info = cache_info(cache_dir)
    for sub in Path(cache_dir).glob("??"):
        if sub.is_dir():
            shutil.rmtree(sub)
    return info["entries"]


def encode_pair_rows(G: GroupTable, rows, summary: dict | None = None) -> bytes:
    doc = {"order": G.order, "rows": adjacency_hex(rows, G.order), "summary": summary or {}}
    return json.dumps(doc, sort_keys=True).encode()


def decode_pair_rows(G: GroupTable, payload: bytes) -> tuple[tuple[int, ...], dict]:
    doc = json.loads(payload)
    if doc.get("order") != G.order or len(doc.get("rows", ())) != G.order:
        raise ValueError("cached matrix does not match the group order")
    return rows_from_hex(doc["rows"]), doc.get("summary", {})


def cached_pair_rows(G: GroupTable, cache_dir: Path | None, workers: int = 1) -> tuple[tuple[int, ...], bool]:
    """The generating-pair matrix, from the cache when possible.  Returns (rows, hit)."""
    if cache_dir is None:
        return generating_pair_rows(G, workers), False
    key = G.content_hash()
    payload = cache_get(cache_dir, key)
    if payload is not None:
        try:
            rows, _ = decode_pair_rows(G, payload)
            G._cache["genpairs"] = rows
            return rows, True
        except (ValueError, KeyError) as exc:
            log.warning("discarding unusable cache entry for %s: %s", key, exc)
    rows = generating_pair_rows(G, workers)
    cache_put(cache_dir, key, encode_pair_rows(G, rows))
    return rows, False
