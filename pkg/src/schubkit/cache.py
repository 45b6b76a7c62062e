"""On-disk cache of computed polynomials, keyed by (kind, input, code version)."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

from . import __version__

log = logging.getLogger(__name__)


def canonical_json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


class PolynomialCache:
    """Single writer per key; concurrent writers of one key write identical bytes."""

    def __init__(self, root: str | os.PathLike | None, version: str = __version__):
        self.root = Path(root) if root else None
        self.version = version
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)

    def key(self, kind: str, text: str) -> str:
        return hashlib.sha256(canonical_json([kind, text, self.version]).encode()).hexdigest()

    def path(self, kind: str, text: str) -> Path | None:
        if self.root is None:
            return None
        return self.root / f"{self.key(kind, text)}.json"

    def get(self, kind: str, text: str) -> dict | None:
        p = self.path(kind, text)
        if p is None or not p.exists():
            return None
        try:
            data = json.loads(p.read_text())
            if data.get("kind") != kind or data.get("input") != text or data.get("version") != self.version:
                raise ValueError("entry does not match its key")
            return data["payload"]
        except (ValueError, KeyError, TypeError, AttributeError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", p.name, exc)
            return None

    def put(self, kind: str, text: str, payload: dict) -> None:
        p = self.path(kind, text)
        if p is None:
            return
        body = canonical_json({"kind": kind, "input": text, "version": self.version, "payload": payload})
        fd, tmp = tempfile.mkstemp(dir=p.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(body)
        os.replace(tmp, p)

    def get_or_compute(self, kind: str, text: str, compute: Callable[[], dict]) -> dict:
        hit = self.get(kind, text)
        if hit is not None:
            return hit
        payload = compute()
        self.put(kind, text, payload)
        return payload
