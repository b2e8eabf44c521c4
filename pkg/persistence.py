"""
Persistence for verification runs: save/load report documents as JSON.
"""
from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Any

from utils import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1


class ReportStore:
    """JSON file holding one `{"schema": 1, ...}` document, guarded by a lock."""

    def __init__(self, path: str | Path, indent: int | None = 2) -> None:
        self.path = Path(path).expanduser()
        self.indent = indent
        self._lock = threading.Lock()

    def save(self, document: dict[str, Any]) -> Path:
        """Write the document (adding the schema field); errors propagate as OSError."""
        payload = {"schema": SCHEMA_VERSION, **{k: v for k, v in document.items() if k != "schema"}}
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            with open(tmp, "w", encoding="utf-8") as f:
                json.dump(payload, f, indent=self.indent)
                f.write("\n")
            tmp.replace(self.path)
        logger.info("saved %d report(s) to %s", len(payload.get("reports", [])), self.path)
        return self.path

    def load(self) -> dict[str, Any]:
        """Read a saved document; a missing or unreadable file gives an empty one."""
        with self._lock:
            if not self.path.exists():
                return {"schema": SCHEMA_VERSION, "reports": []}
            try:
                with open(self.path, encoding="utf-8") as f:
                    data = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning("Failed to load reports from %s: %s", self.path, e)
                return {"schema": SCHEMA_VERSION, "reports": []}
        if not isinstance(data, dict) or data.get("schema") != SCHEMA_VERSION:
            logger.warning("Ignoring %s: not a schema %d report document", self.path, SCHEMA_VERSION)
            return {"schema": SCHEMA_VERSION, "reports": []}
        return data

    def failures(self) -> list[dict[str, Any]]:
        return [r for r in self.load().get("reports", []) if r.get("status") == "fail"]
