"""Tests for the report store."""
from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from persistence import SCHEMA_VERSION, ReportStore


def test_save_and_load(tmp_path) -> None:
    store = ReportStore(tmp_path / "out" / "reports.json", indent=None)
    doc = {"reports": [{"property": "zeta_bound", "status": "pass"}, {"property": "km", "status": "fail"}],
           "summary": {"instances": 1}}
    path = store.save(doc)
    assert path.exists()
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["schema"] == SCHEMA_VERSION
    assert store.load()["summary"] == {"instances": 1}
    assert store.failures() == [{"property": "km", "status": "fail"}]
    assert not (tmp_path / "out" / "reports.json.tmp").exists()


def test_missing_and_foreign_files(tmp_path) -> None:
    assert ReportStore(tmp_path / "none.json").load() == {"schema": SCHEMA_VERSION, "reports": []}
    other = tmp_path / "other.json"
    other.write_text('{"schema": 99, "reports": [1]}', encoding="utf-8")
    assert ReportStore(other).load()["reports"] == []
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert ReportStore(broken).failures() == []
