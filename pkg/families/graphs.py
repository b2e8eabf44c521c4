"""
Graph families built with networkx: cycles, paths, complete graphs, stars,
whiskered cycles, disjoint cycles, G(n, p), and the exhaustive sweeps.
"""
from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations
from typing import Any

import networkx as nx

from errors import FamilyError
from families.base import BaseFamily
from hypergraph import Hypergraph, disjoint_union


def from_networkx(graph: nx.Graph, labels: list[str] | None = None) -> Hypergraph:
    """Vertices in sorted node order, labelled 1..n unless labels are given."""
    nodes = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    names = labels if labels is not None else [str(i + 1) for i in range(len(nodes))]
    return Hypergraph.from_edges(names, ((1 << index[a]) | (1 << index[b]) for a, b in graph.edges))


class CycleFamily(BaseFamily):
    name = "cycle"
    min_size = 3

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        return from_networkx(nx.cycle_graph(self.require(params, "n", 3)))


class PathFamily(BaseFamily):
    name = "path"

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        return from_networkx(nx.path_graph(self.require(params, "n", 1)))


class CompleteFamily(BaseFamily):
    name = "complete"

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        return from_networkx(nx.complete_graph(self.require(params, "n", 1)))


class StarFamily(BaseFamily):
    """K_{1,n}: center `c` and leaves 1..n."""
    name = "star"

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 1)
        return from_networkx(nx.star_graph(n), ["c"] + [str(i) for i in range(1, n + 1)])


class WhiskeredCycleFamily(BaseFamily):
    """C_n with a pendant vertex w_i hung on every cycle vertex i."""
    name = "whiskered-cycle"
    min_size = 3

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 3)
        graph = nx.cycle_graph(n)
        graph.add_edges_from((i, n + i) for i in range(n))
        labels = [str(i + 1) for i in range(n)] + [f"w{i + 1}" for i in range(n)]
        return from_networkx(graph, labels)


class DisjointCyclesFamily(BaseFamily):
    """k disjoint copies of C_n (size parameter k)."""
    name = "disjoint-cycles"
    size_param = "k"
    defaults = {"n": 5}

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        k = self.require(params, "k", 1)
        n = self.require(params, "n", 3)
        out = Hypergraph((), ())
        for copy in range(k):
            labels = [f"{chr(ord('a') + copy % 26)}{i + 1}" for i in range(n)]
            out = disjoint_union(out, from_networkx(nx.cycle_graph(n), labels))
        return out


class RandomGraphFamily(BaseFamily):
    """Erdős–Rényi G(n, p)."""
    name = "random-graph"
    kind = "random"
    defaults = {"prob": 0.5}

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 1)
        prob = float(params["prob"])
        if not 0.0 <= prob <= 1.0:
            raise FamilyError(f"edge probability must lie in [0, 1], got {prob}")
        return from_networkx(nx.gnp_random_graph(n, prob, seed=rng))


class AtlasFamily(BaseFamily):
    """Every graph on 1..n vertices up to isomorphism (n <= 7)."""
    name = "graphs"
    kind = "exhaustive"
    max_size = 7

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        index = self.require(params, "index", 0)
        atlas = nx.graph_atlas_g()
        if index >= len(atlas):
            raise FamilyError(f"atlas has {len(atlas)} graphs")
        return from_networkx(atlas[index])

    def enumerate(self, n: int) -> Iterator[Hypergraph]:
        if n > self.max_size:
            raise FamilyError(f"the graph atlas stops at {self.max_size} vertices")
        for graph in nx.graph_atlas_g():
            if 1 <= graph.number_of_nodes() <= n:
                yield from_networkx(graph)


class LabeledGraphFamily(BaseFamily):
    """Every labelled graph on 1..n vertices."""
    name = "labeled-graphs"
    kind = "exhaustive"

    def generate(self, params: dict[str, Any], rng: random.Random) -> Hypergraph:
        n = self.require(params, "n", 1)
        code = self.require(params, "index", 0)
        pairs = list(combinations(range(n), 2))
        if code >> len(pairs):
            raise FamilyError(f"index must be below 2^{len(pairs)}")
        labels = [str(i + 1) for i in range(n)]
        return Hypergraph.from_edges(labels, ((1 << a) | (1 << b) for j, (a, b) in enumerate(pairs) if code >> j & 1))

    def enumerate(self, n: int) -> Iterator[Hypergraph]:
        for size in range(1, n + 1):
            pairs = len(list(combinations(range(size), 2)))
            for code in range(1 << pairs):
                yield self.generate({"n": size, "index": code}, random.Random())
