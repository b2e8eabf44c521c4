"""
Hypergraph families: the separating family H_s, random uniform hypergraphs,
random complexes (as their minimal nonfaces), and every clutter on n vertices.
"""
from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations
from math import comb
from typing import Any

from complex import make_complex, minimal_nonfaces
from errors import FamilyError
from families.base import BaseFamily
from hypergraph import Hypergraph
from utils import canonical_key, full_mask, submasks_by_size


def _labels(n: int) -> list[str]:
    return [str(i + 1) for i in range(n)]


class SeparationFamily(BaseFamily):
    """H_s on {x, y1..ys, z1..zs} with edges {x, yi, zi}."""
    name = "hs"
    size_param = "s"

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        s = self.require(params, "s", 1)
        labels = ["x"] + [f"y{i}" for i in range(1, s + 1)] + [f"z{i}" for i in range(1, s + 1)]
        return Hypergraph.from_edges(labels, (1 | 1 << i | 1 << (s + i) for i in range(1, s + 1)))


class RandomUniformFamily(BaseFamily):
    """m distinct d-subsets of n vertices, uniformly at random."""
    name = "random-uniform"
    kind = "random"
    defaults = {"d": 3, "m": 6}

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 1)
        d = self.require(params, "d", 1)
        m = self.require(params, "m", 0)
        if d > n:
            raise FamilyError(f"edge size {d} exceeds {n} vertices")
        if m > comb(n, d):
            raise FamilyError(f"only {comb(n, d)} distinct {d}-subsets of {n} vertices")
        chosen = rng.sample(list(combinations(range(n), d)), m)
        return Hypergraph.from_edges(_labels(n), (sum(1 << v for v in c) for c in chosen))


class RandomComplexFamily(BaseFamily):
    """Complex generated by k random faces on n vertices, returned as its minimal nonfaces."""
    name = "random-complex"
    kind = "random"
    defaults = {"k": 4}

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 1)
        k = self.require(params, "k", 1)
        generators = [sum(1 << v for v in rng.sample(range(n), rng.randint(1, n))) for _ in range(k)]
        return minimal_nonfaces(make_complex(_labels(n), generators))


def antichains(n: int) -> Iterator[tuple[int, ...]]:
    """Every antichain of nonempty subsets of an n-set, members in canonical order."""
    pool = [s for s in submasks_by_size(full_mask(n)) if s]
    chosen: list[int] = []

    def walk(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(pool):
            yield tuple(chosen)
            return
        s = pool[i]
        if not any(c & s == c for c in chosen):
            chosen.append(s)
            yield from walk(i + 1)
            chosen.pop()
        yield from walk(i + 1)

    yield from walk(0)


class AntichainFamily(BaseFamily):
    """Every simple hypergraph on exactly n labelled vertices, for sizes 1..n."""
    name = "antichains"
    kind = "exhaustive"

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 1)
        index = self.require(params, "index", 0)
        for i, edges in enumerate(antichains(n)):
            if i == index:
                return Hypergraph(tuple(_labels(n)), tuple(sorted(edges, key=canonical_key)))
        raise FamilyError(f"fewer than {index + 1} antichains on {n} vertices")

    def enumerate(self, n: int) -> Iterator[Hypergraph]:
        for size in range(1, n + 1):
            labels = tuple(_labels(size))
            for edges in antichains(size):
                yield Hypergraph(labels, edges)
