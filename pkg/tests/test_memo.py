"""Tests for the memo cache."""
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from memo import MemoCache


def test_get_or_compute_counts_hits() -> None:
    cache = MemoCache("t")
    calls = []

    def compute() -> int:
        calls.append(1)
        return 42

    assert cache.get_or_compute(("k", 1), compute) == 42
    assert cache.get_or_compute(("k", 1), compute) == 42
    assert len(calls) == 1
    assert cache.hits == 1 and cache.misses == 1
    assert ("k", 1) in cache
    assert cache.get(("k", 2), "none") == "none"


def test_recursive_compute() -> None:
    cache = MemoCache("fib")

    def fib(n: int) -> int:
        return cache.get_or_compute(n, lambda: n if n < 2 else fib(n - 1) + fib(n - 2))

    assert fib(30) == 832040
    assert len(cache) == 31


def test_clear() -> None:
    cache = MemoCache()
    cache.get_or_compute("a", lambda: 1)
    cache.clear()
    assert len(cache) == 0
    assert cache.hits == 0 and cache.misses == 0
