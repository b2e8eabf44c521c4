"""
Thread-safe memo cache keyed on canonical complex forms.

Shared by the vertex-decomposability search and the regularity recursion so
both walk the same link/deletion tree only once.
"""
from __future__ import annotations

import threading
from collections.abc import Callable, Hashable
from typing import Any, TypeVar

from utils import get_logger

logger = get_logger(__name__)

T = TypeVar("T")


class MemoCache:
    """Dict behind a lock with atomic get-or-insert."""

    def __init__(self, name: str = "memo") -> None:
        self.name = name
        self._data: dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], T]) -> T:
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
            self.misses += 1
        # compute outside the lock: recursive callers re-enter the cache
        value = compute()
        with self._lock:
            # first writer wins
            return self._data.setdefault(key, value)

    def get(self, key: Hashable, default: Any = None) -> Any:
        with self._lock:
            return self._data.get(key, default)

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._data

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def log_stats(self) -> None:
        logger.debug("%s cache: %d entries, %d hits, %d misses", self.name, len(self), self.hits, self.misses)
