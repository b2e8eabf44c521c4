"""Tests for utils."""
from __future__ import annotations

import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from utils import (
    canonical_key,
    env_str,
    format_relation,
    format_set,
    full_mask,
    is_prime,
    iter_bits,
    mask_labels,
    mask_of,
    setup_logging,
    submasks_by_size,
)


def test_iter_bits_ascending() -> None:
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert mask_of([4, 1, 2]) == 0b10110


def test_full_mask() -> None:
    assert full_mask(0) == 0
    assert full_mask(3) == 0b111


def test_canonical_key_orders_by_size_first() -> None:
    masks = [0b100, 0b011, 0b001, 0b110, 0b000]
    assert sorted(masks, key=canonical_key) == [0b000, 0b001, 0b100, 0b011, 0b110]


def test_submasks_by_size_is_canonical() -> None:
    subs = list(submasks_by_size(0b1011))
    assert len(subs) == 8
    assert subs == sorted(subs, key=canonical_key)
    assert subs[0] == 0 and subs[-1] == 0b1011


def test_is_prime() -> None:
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(2_147_483_647)
    assert not is_prime(1)


def test_formatting() -> None:
    labels = ["x", "y1", "z1"]
    assert mask_labels(0b101, labels) == ["x", "z1"]
    assert format_set(0b111, labels) == "{x,y1,z1}"
    assert format_set(0, labels) == "{}"
    assert format_relation(2, "le", 3) == "2 <= 3"


def test_env_str(monkeypatch) -> None:
    monkeypatch.setenv("REGTOOL_TEST_VALUE", "  hello ")
    assert env_str("REGTOOL_TEST_VALUE") == "hello"
    assert env_str("REGTOOL_TEST_MISSING", "d") == "d"


def test_setup_logging_file(tmp_path) -> None:
    log = tmp_path / "logs" / "regtool.log"
    setup_logging("INFO", log)
    logging.getLogger("regtool.test").info("written")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "written" in log.read_text(encoding="utf-8")
    setup_logging("WARNING")
