"""
Shared utilities: logging, environment helpers, bitset helpers, formatting.
"""
from __future__ import annotations

import logging
import os
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

# -----------------------------------------------------------------------------
# Logging
# -----------------------------------------------------------------------------

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    level: str | int = "WARNING",
    log_file: str | Path | None = None,
    format_string: str = LOG_FORMAT,
    date_format: str = LOG_DATE_FORMAT,
) -> None:
    """Configure root logger (stderr) and optional file handler."""
    log_level = getattr(logging, level.upper(), logging.WARNING) if isinstance(level, str) else level
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        path = Path(log_file).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path, encoding="utf-8"))
    logging.basicConfig(
        level=log_level,
        format=format_string,
        datefmt=date_format,
        handlers=handlers,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


# -----------------------------------------------------------------------------
# Config / env helpers
# -----------------------------------------------------------------------------

def env_str(key: str, default: str = "") -> str:
    return os.environ.get(key, default).strip()


# -----------------------------------------------------------------------------
# Bitsets (vertex subsets of a universe of at most 64 vertices)
# -----------------------------------------------------------------------------

def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonical_key(mask: int) -> tuple[int, int]:
    """Canonical edge/face order: cardinality first, then the bit pattern."""
    return (mask.bit_count(), mask)


def submasks_by_size(mask: int) -> Iterator[int]:
    """All subsets of `mask` in canonical order (ascending size, then value)."""
    from itertools import combinations

    bits = [1 << i for i in iter_bits(mask)]
    for k in range(len(bits) + 1):
        # combinations of ascending single bits are not value-sorted across
        # different leading elements, so sort each layer
        layer = sorted(sum(c) for c in combinations(bits, k))
        yield from layer


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


# -----------------------------------------------------------------------------
# Formatting
# -----------------------------------------------------------------------------

def mask_labels(mask: int, labels: Sequence[str]) -> list[str]:
    return [labels[i] for i in iter_bits(mask)]


def format_set(mask: int, labels: Sequence[str]) -> str:
    """Human-readable subset, e.g. {x,y1,z1}."""
    return "{" + ",".join(mask_labels(mask, labels)) + "}"


def format_relation(left: object, op: str, right: object) -> str:
    symbols = {"le": "<=", "ge": ">=", "eq": "==", "in": "in", "lt": "<"}
    return f"{left} {symbols.get(op, op)} {right}"
