"""JSON-lines fingerprint cache keyed by (diagram id, group, n).

A damaged, missing or unreadable cache only ever costs a recomputation.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "GNKNOT_CACHE"
CACHE_FILE = "counts.jsonl"


def _group_key(group):
    if isinstance(group, str):
        return group, None
    return group.name, group.digest


class CountCache:
    def __init__(self, directory: str | os.PathLike, version: str = __version__):
        self.directory = Path(directory)
        self.path = self.directory / CACHE_FILE
        self.version = version
        self._records: Optional[dict] = None

    @classmethod
    def from_env(cls, directory: Optional[str] = None) -> Optional["CountCache"]:
        directory = directory or os.environ.get(CACHE_ENV)
        return cls(directory) if directory else None

    def _load(self) -> dict:
        if self._records is not None:
            return self._records
        records = {}
        try:
            with open(self.path, encoding="utf-8", errors="replace") as fh:
                for line in fh:
                    try:
                        rec = json.loads(line)
                        key = (rec["diagram_id"], rec["group"], rec.get("group_digest"), int(rec["n"]))
                        count = int(rec["count"])
                        version = rec["version"]
                    except (ValueError, KeyError, TypeError):
                        continue
                    records[key] = (count, version)
        except FileNotFoundError:
            pass
        except OSError as exc:
            log.warning("cache read failed (%s); treating as empty", exc)
        self._records = records
        return records

    def get(self, diagram_id: str, group, n: int) -> Optional[int]:
        name, digest = _group_key(group)
        hit = self._load().get((diagram_id, name, digest, int(n)))
        if hit is None or hit[1] != self.version:
            return None
        return hit[0]

    def put(self, diagram_id: str, group, n: int, count: int) -> None:
        name, digest = _group_key(group)
        records = self._load()
        records[(diagram_id, name, digest, int(n))] = (int(count), self.version)
        lines = [
            json.dumps(
                {
                    "diagram_id": d,
                    "group": g,
                    "group_digest": gd,
                    "n": k,
                    "count": c,
                    "version": v,
                },
                sort_keys=True,
            )
            for (d, g, gd, k), (c, v) in sorted(records.items(), key=lambda x: repr(x[0]))
        ]
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".counts-", suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write("\n".join(lines) + "\n")
            os.replace(tmp, self.path)
        except OSError as exc:
            log.warning("cache write failed (%s); continuing without it", exc)
