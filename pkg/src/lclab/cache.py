"""On-disk cache of built triangles.

One JSON file per (g, h, n_max) full build.  Entries carry a schema
version and a content checksum; anything that fails to parse, has the
wrong version, or does not match its checksum raises CacheError so the
caller can fall back to a fresh build.  Writes go through a temp file in
the same directory followed by an atomic rename, so a crash mid-write
never leaves a half-file behind.

A request for n_max = N is also satisfied by any cached build of the same
family with a larger N: rows of the recursion do not depend on later rows,
so truncation is exact.  Column-limited builds are never cached.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from fractions import Fraction
from pathlib import Path

from .arith import ArithFn, _exactify
from .triangles import Triangle

SCHEMA_VERSION = 1
ENV_VAR = "LCLAB_CACHE"


class CacheError(Exception):
    """A cache entry exists but cannot be trusted."""


def _safe(token: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.=-]", "_", token)


def entry_name(g_key: str, h: str, n_max: int) -> str:
    return f"triangle-{_safe(g_key)}-{h}-n{n_max}.json"


_NAME_RE = re.compile(r"^triangle-(?P<g>.+)-(?P<h>one|id)-n(?P<n>\d+)\.json$")


def _payload(tri: Triangle) -> dict:
    body = {
        "schema": SCHEMA_VERSION,
        "kind": "triangle",
        "g": tri.g.key,
        "g_label": tri.g.label,
        "h": tri.h,
        "n_max": tri.n_max,
        "rows": [[str(v) for v in row] for row in (tri.row_scaled(n) for n in range(tri.n_max + 1))],
    }
    body["checksum"] = _digest(body)
    return body


def _digest(body: dict) -> str:
    stripped = {k: v for k, v in body.items() if k != "checksum"}
    blob = json.dumps(stripped, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def save_triangle(directory, tri: Triangle) -> Path:
    """Write tri to the cache directory, atomically.  Full builds only."""
    if tri.m_max is not None:
        raise ValueError("column-limited builds are not cached")
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / entry_name(tri.g.key, tri.h, tri.n_max)
    data = json.dumps(_payload(tri), separators=(",", ":"))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


def _parse_entry(path: Path, g: ArithFn, h: str, n_max: int) -> Triangle:
    try:
        body = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"{path.name}: unreadable ({exc})") from exc
    if body.get("schema") != SCHEMA_VERSION:
        raise CacheError(f"{path.name}: schema {body.get('schema')!r}, expected {SCHEMA_VERSION}")
    if body.get("checksum") != _digest(body):
        raise CacheError(f"{path.name}: checksum mismatch")
    if body.get("g") != g.key or body.get("h") != h:
        raise CacheError(
            f"{path.name}: cached family ({body.get('g')!r}, {body.get('h')!r}), "
            f"expected ({g.key!r}, {h!r})"
        )
    try:
        stored = body["n_max"]
        if stored < n_max or len(body["rows"]) != stored + 1:
            raise CacheError(f"{path.name}: too small or row count off")
        rows = [
            [_exactify(Fraction(v)) for v in row] for row in body["rows"][: n_max + 1]
        ]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise CacheError(f"{path.name}: malformed rows ({exc})") from exc
    return Triangle(g, h, rows)


def load_triangle(directory, g: ArithFn, h: str, n_max: int) -> Triangle | None:
    """Return a cached triangle for (g, h, n_max), or None if absent.

    Prefers the exact size, otherwise truncates the smallest cached build
    that is large enough.  Raises CacheError on corrupt candidates.
    """
    directory = Path(directory)
    if not directory.is_dir():
        return None
    exact = directory / entry_name(g.key, h, n_max)
    if exact.exists():
        return _parse_entry(exact, g, h, n_max)
    best: tuple[int, Path] | None = None
    for path in directory.glob(f"triangle-{_safe(g.key)}-{h}-n*.json"):
        match = _NAME_RE.match(path.name)
        if not match:
            continue
        size = int(match.group("n"))
        if size >= n_max and (best is None or size < best[0]):
            best = (size, path)
    if best is None:
        return None
    return _parse_entry(best[1], g, h, n_max)
