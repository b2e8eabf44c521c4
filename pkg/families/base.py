"""
Base family interface: every instance generator implements this.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

from errors import FamilyError
from hypergraph import Hypergraph


@dataclass
class FamilyResult:
    """Result from one generator call: success flag, optional error, and the instance."""
    success: bool = True
    error: str | None = None
    hypergraph: Hypergraph | None = None
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None


class BaseFamily(ABC):
    """Abstract base for named hypergraph families.

    `kind` is "deterministic" (one instance per size), "random" (seeded) or
    "exhaustive" (enumerates every instance up to a size).
    """

    name: str = "base"
    kind: str = "deterministic"
    size_param: str = "n"
    min_size: int = 1
    defaults: dict[str, Any] = {}

    def params(self, given: dict[str, Any] | None = None) -> dict[str, Any]:
        merged = dict(self.defaults)
        merged.update({k: v for k, v in (given or {}).items() if v is not None})
        return merged

    def require(self, params: dict[str, Any], key: str, minimum: int) -> int:
        if key not in params:
            raise FamilyError(f"family {self.name} needs parameter {key}")
        value = int(params[key])
        if value < minimum:
            raise FamilyError(f"family {self.name}: {key} must be >= {minimum}, got {value}")
        return value

    @abstractmethod
    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        """Build one instance; raise FamilyError on bad parameters."""
        ...

    def enumerate(self, n: int) -> Iterator[Hypergraph]:
        raise FamilyError(f"family {self.name} is not exhaustive")

    def generate_safe(self, params: dict[str, Any] | None = None, seed: int | None = None) -> FamilyResult:
        """Wrapper that catches exceptions and returns a failed result."""
        merged = self.params(params)
        try:
            h = self.generate(merged, random.Random(seed))
        except Exception as e:
            return FamilyResult(success=False, error=str(e), params=merged, seed=seed)
        return FamilyResult(hypergraph=h, params=merged, seed=seed)
