"""On-disk persistence of Kazhdan-Lusztig tables.

When the environment variable ``ALCOVE_TILT_CACHE`` names a directory, KL
tables are stored there as one JSON file per (root datum, frontier length).
Each file carries a sha256 checksum of its payload.  A file whose checksum or
structure does not verify is deleted and the table is recomputed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import re
import tempfile
from pathlib import Path

from .affine_weyl import AffineWeylGroup
from .errors import CacheCorrupted
from .hecke import kl_table
from .laurent import LaurentPolynomial

__all__ = ["ENV_VAR", "cache_dir", "save_kl", "load_kl", "ensure_kl"]

ENV_VAR = "ALCOVE_TILT_CACHE"
log = logging.getLogger(__name__)


def cache_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def _datum_digest(group: AffineWeylGroup) -> str:
    return hashlib.sha256(group.rd.key().encode()).hexdigest()[:16]


def _path(d: Path, group: AffineWeylGroup, length: int) -> Path:
    return d / f"kl-{_datum_digest(group)}-L{length}.json"


def _payload(group: AffineWeylGroup, length: int) -> str:
    table = kl_table(group)
    rows = []
    for w in group.elements_up_to(length):
        terms = sorted(table.terms(w).items(), key=lambda kv: group.sort_key(kv[0]))
        rows.append([list(group.word(w)), [[list(group.word(y)), c.to_json()] for y, c in terms]])
    rows.sort(key=lambda r: (len(r[0]), r[0]))
    return json.dumps({"datum": json.loads(group.rd.key()), "frontier": length, "rows": rows},
                      sort_keys=True, separators=(",", ":"))


def save_kl(group: AffineWeylGroup, length: int, directory: Path | None = None) -> Path | None:
    """Compute the table up to ``length`` if needed and write it atomically."""
    d = directory or cache_dir()
    if d is None:
        return None
    d.mkdir(parents=True, exist_ok=True)
    kl_table(group).extend_to(length)
    payload = _payload(group, length)
    doc = json.dumps({"sha256": hashlib.sha256(payload.encode()).hexdigest(), "payload": payload},
                     separators=(",", ":"))
    target = _path(d, group, length)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(doc)
    os.replace(tmp, target)
    return target


def _read(path: Path, group: AffineWeylGroup):
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        payload = doc["payload"]
        if hashlib.sha256(payload.encode()).hexdigest() != doc["sha256"]:
            raise CacheCorrupted(f"checksum mismatch in {path.name}")
        data = json.loads(payload)
        if data["datum"] != json.loads(group.rd.key()):
            raise CacheCorrupted(f"datum mismatch in {path.name}")
        rows = [(group.from_word(w), {group.from_word(y): LaurentPolynomial.from_json(c) for y, c in terms})
                for w, terms in data["rows"]]
        return int(data["frontier"]), rows
    except CacheCorrupted:
        raise
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CacheCorrupted(f"unreadable cache file {path.name}: {exc}") from None


def load_kl(group: AffineWeylGroup, length: int, directory: Path | None = None) -> bool:
    """Install the smallest cached table covering ``length``; returns success.

    Corrupted files are removed so that the caller recomputes them.
    """
    d = directory or cache_dir()
    if d is None or not d.is_dir():
        return False
    pattern = re.compile(rf"kl-{_datum_digest(group)}-L(\d+)\.json$")
    found = sorted((int(m.group(1)), f) for f in d.iterdir() if (m := pattern.match(f.name)))
    table = kl_table(group)
    for n, f in found:
        if n < length:
            continue
        try:
            frontier, rows = _read(f, group)
        except CacheCorrupted as exc:
            log.warning("%s; recomputing", exc)
            f.unlink(missing_ok=True)
            continue
        for w, terms in rows:
            table.insert(w, terms)
        with table._lock:
            table.frontier = max(table.frontier, frontier)
        return True
    return False


def ensure_kl(group: AffineWeylGroup, length: int) -> None:
    """Make every ``C_w`` with ``l(w) <= length`` available, using the cache if set."""
    table = kl_table(group)
    if table.frontier >= length:
        return
    if load_kl(group, length):
        return
    table.extend_to(length)
    if cache_dir() is not None:
        save_kl(group, length)
