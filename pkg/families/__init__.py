"""
Families package: pluggable named instance generators.
"""
from __future__ import annotations

import random
from typing import Any

from errors import FamilyError
from families.base import BaseFamily, FamilyResult
from families.graphs import (
    AtlasFamily,
    CompleteFamily,
    CycleFamily,
    DisjointCyclesFamily,
    LabeledGraphFamily,
    PathFamily,
    RandomGraphFamily,
    StarFamily,
    WhiskeredCycleFamily,
    from_networkx,
)
from families.hypergraphs import AntichainFamily, RandomComplexFamily, RandomUniformFamily, SeparationFamily, antichains
from hypergraph import Hypergraph

FAMILIES: dict[str, BaseFamily] = {
    f.name: f
    for f in (
        SeparationFamily(),
        CycleFamily(),
        PathFamily(),
        CompleteFamily(),
        StarFamily(),
        WhiskeredCycleFamily(),
        DisjointCyclesFamily(),
        RandomUniformFamily(),
        RandomGraphFamily(),
        RandomComplexFamily(),
        AtlasFamily(),
        LabeledGraphFamily(),
        AntichainFamily(),
    )
}


def get_family(name: str) -> BaseFamily:
    key = name.strip().lower().replace("_", "-")
    try:
        return FAMILIES[key]
    except KeyError:
        raise FamilyError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}") from None


def generate_family(name: str, params: dict[str, Any] | None = None, seed: int | None = None) -> Hypergraph:
    family = get_family(name)
    return family.generate(family.params(params), random.Random(seed))


__all__ = [
    "FAMILIES",
    "AntichainFamily",
    "AtlasFamily",
    "BaseFamily",
    "CompleteFamily",
    "CycleFamily",
    "DisjointCyclesFamily",
    "FamilyResult",
    "LabeledGraphFamily",
    "PathFamily",
    "RandomComplexFamily",
    "RandomGraphFamily",
    "RandomUniformFamily",
    "SeparationFamily",
    "StarFamily",
    "WhiskeredCycleFamily",
    "antichains",
    "from_networkx",
    "generate_family",
    "get_family",
]
