"""
Combinatorial statistics behind the regularity bounds: matchings, induced
matchings, 2-collages, t-separation, star packings, the weak packing
statistic and the independence number.

All searches are exact. Witnesses are lexicographically least in edge index
order among the optimal ones.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from itertools import combinations
from typing import Union

import networkx as nx

from complex import SimplicialComplex, faces, independence_complex, is_simplex, link
from errors import (
    EdgeNotFoundError,
    IdenticalEdgesError,
    InvariantError,
    NotAGraphError,
    TooFewEdgesError,
    VoidComplexError,
)
from hypergraph import Hypergraph, VertexSubset, is_graph, minimal_masks
from models import EdgeFamily, FamilyKind, StarPacking
from utils import canonical_key, get_logger, iter_bits

logger = get_logger(__name__)

FamilyLike = Union[EdgeFamily, Sequence[int]]


def _indices(h: Hypergraph, family: FamilyLike) -> tuple[int, ...]:
    members = tuple(family.members if isinstance(family, EdgeFamily) else family)
    if len(set(members)) != len(members):
        raise EdgeNotFoundError("edge family repeats an edge")
    for i in members:
        if not 0 <= i < len(h.edges):
            raise EdgeNotFoundError(f"edge index {i} outside 0..{len(h.edges) - 1}")
    return members


def _union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


def _weight(mask: int) -> int:
    return mask.bit_count() - 1


# -----------------------------------------------------------------------------
# Matchings
# -----------------------------------------------------------------------------

def _best_matching(
    edges: Sequence[int],
    admissible: Callable[[list[int], int, int], bool],
    score: Callable[[int], int],
) -> list[int]:
    """DFS over matchings in lexicographic index order, keeping the first best."""
    tail = [0] * (len(edges) + 1)
    for j in range(len(edges) - 1, -1, -1):
        tail[j] = tail[j + 1] + score(edges[j])
    best: list[int] = []
    best_score = 0

    def extend(start: int, used: int, chosen: list[int], value: int) -> None:
        nonlocal best, best_score
        if value > best_score:
            best, best_score = chosen[:], value
        for j in range(start, len(edges)):
            if value + tail[j] <= best_score:
                return
            e = edges[j]
            if e & used == 0 and admissible(chosen, used, j):
                chosen.append(j)
                extend(j + 1, used | e, chosen, value + score(e))
                chosen.pop()

    extend(0, 0, [], 0)
    return best


def _induces_exactly(edges: Sequence[int]) -> Callable[[list[int], int, int], bool]:
    def check(chosen: list[int], used: int, j: int) -> bool:
        u = used | edges[j]
        return sum(1 for x in edges if x & ~u == 0) == len(chosen) + 1

    return check


def max_matching(h: Hypergraph) -> EdgeFamily:
    best = _best_matching(h.edges, lambda *_: True, lambda _: 1)
    return EdgeFamily(tuple(best), FamilyKind.MATCHING)


def matching_number(h: Hypergraph) -> int:
    """ν: largest number of pairwise disjoint edges."""
    return len(max_matching(h))


def min_maximal_matching(h: Hypergraph) -> EdgeFamily:
    edges = h.edges
    everything = range(len(edges))
    for k in range(len(edges) + 1):
        for combo in combinations(everything, k):
            used = 0
            for i in combo:
                if used & edges[i]:
                    break
                used |= edges[i]
            else:
                if all(e & used for e in edges):
                    return EdgeFamily(combo, FamilyKind.MATCHING)
    raise InvariantError("no maximal matching found")


def minimax_matching_number(h: Hypergraph) -> int:
    """ν_min: smallest inclusion-maximal matching."""
    return len(min_maximal_matching(h))


def max_induced_matching(h: Hypergraph) -> EdgeFamily:
    best = _best_matching(h.edges, _induces_exactly(h.edges), lambda _: 1)
    return EdgeFamily(tuple(best), FamilyKind.INDUCED_MATCHING)


def induced_matching_number(h: Hypergraph) -> int:
    """ν_ind: largest matching whose vertex union induces no further edge."""
    return len(max_induced_matching(h))


def max_weight_induced_matching(h: Hypergraph) -> EdgeFamily:
    """Induced matching maximizing Σ(|E|-1)."""
    best = _best_matching(h.edges, _induces_exactly(h.edges), _weight)
    return EdgeFamily(tuple(best), FamilyKind.INDUCED_MATCHING)


def is_induced_matching(h: Hypergraph, family: FamilyLike) -> bool:
    members = _indices(h, family)
    masks = [h.edges[i] for i in members]
    if sum(m.bit_count() for m in masks) != _union(masks).bit_count():
        return False
    u = _union(masks)
    return sum(1 for x in h.edges if x & ~u == 0) == len(members)


# -----------------------------------------------------------------------------
# Separation and 2-collages
# -----------------------------------------------------------------------------

def _bits(x: VertexSubset | int) -> int:
    return x.bits if isinstance(x, VertexSubset) else x


def is_t_separated(e: VertexSubset | int, f: VertexSubset | int, t: int) -> bool:
    """|E∖F| >= t or |F∖E| >= t."""
    a, b = _bits(e), _bits(f)
    if a == b:
        raise IdenticalEdgesError("separation is defined for distinct edges")
    return (a & ~b).bit_count() >= t or (b & ~a).bit_count() >= t


def _covers(edge: int, member: int) -> bool:
    # E∖{v} ⊆ F for some v in E
    return (edge & ~member).bit_count() <= 1


def is_two_collage(h: Hypergraph, family: FamilyLike) -> bool:
    masks = [h.edges[i] for i in _indices(h, family)]
    return all(any(_covers(e, f) for f in masks) for e in h.edges)


def _require_edges(h: Hypergraph) -> None:
    if not h.edges:
        raise TooFewEdgesError("a 2-collage needs at least one edge")


def min_two_collage(h: Hypergraph) -> tuple[int, EdgeFamily]:
    """Smallest 2-collage, by subset search ascending in size."""
    _require_edges(h)
    edges = h.edges
    cover_sets = [sum(1 << j for j, e in enumerate(edges) if _covers(e, f)) for f in edges]
    everything = (1 << len(edges)) - 1
    for k in range(1, len(edges) + 1):
        for combo in combinations(range(len(edges)), k):
            if _union(cover_sets[i] for i in combo) == everything:
                return k, EdgeFamily(combo, FamilyKind.COLLAGE)
    raise InvariantError("the full edge set must be a 2-collage")


def min_weight_two_collage(h: Hypergraph) -> tuple[int, EdgeFamily]:
    """2-collage minimizing Σ(|E|-1); ties go to fewer edges, then lexicographic order.

    Branch and bound: the first uncovered edge must be covered by some member.
    """
    _require_edges(h)
    edges = h.edges
    covered_by = [[i for i, f in enumerate(edges) if _covers(e, f)] for e in edges]
    cover_sets = [sum(1 << j for j, e in enumerate(edges) if _covers(e, f)) for f in edges]
    everything = (1 << len(edges)) - 1
    best: tuple[int, int, tuple[int, ...]] | None = None

    def branch(covered: int, chosen: tuple[int, ...], weight: int) -> None:
        nonlocal best
        if best is not None and (weight, len(chosen)) > best[:2]:
            return
        if covered == everything:
            key = (weight, len(chosen), tuple(sorted(chosen)))
            if best is None or key < best:
                best = key
            return
        open_edges = everything & ~covered
        first = (open_edges & -open_edges).bit_length() - 1
        for i in covered_by[first]:
            if i not in chosen:
                branch(covered | cover_sets[i], chosen + (i,), weight + _weight(edges[i]))

    branch(0, (), 0)
    assert best is not None
    return best[0], EdgeFamily(best[2], FamilyKind.COLLAGE)


def collage_weight(h: Hypergraph, family: FamilyLike) -> int:
    """Σ(|E_i|-1) over the family."""
    return sum(_weight(h.edges[i]) for i in _indices(h, family))


def maximal_2separated_families(h: Hypergraph) -> list[EdgeFamily]:
    """Inclusion-maximal families of pairwise 2-separated edges (maximal cliques)."""
    if not h.edges:
        return [EdgeFamily((), FamilyKind.SEPARATED_FAMILY)]
    g = nx.Graph()
    g.add_nodes_from(range(len(h.edges)))
    for i, j in combinations(range(len(h.edges)), 2):
        if is_t_separated(h.edges[i], h.edges[j], 2):
            g.add_edge(i, j)
    cliques = sorted(tuple(sorted(c)) for c in nx.find_cliques(g))
    return [EdgeFamily(c, FamilyKind.SEPARATED_FAMILY) for c in cliques]


# -----------------------------------------------------------------------------
# Graphs: star packings and independence number
# -----------------------------------------------------------------------------

def _require_graph(g: Hypergraph) -> None:
    if not is_graph(g):
        raise NotAGraphError("operation defined for graphs (2-uniform) only")


def to_networkx(g: Hypergraph) -> nx.Graph:
    _require_graph(g)
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(tuple(iter_bits(e)) for e in g.edges)
    return out


def _closed_neighborhood(graph: nx.Graph, centers: int) -> int:
    m = centers
    for a in iter_bits(centers):
        for b in graph.neighbors(a):
            m |= 1 << b
    return m


def star_packings(g: Hypergraph) -> list[StarPacking]:
    """Every maximal center-separated packing of nondegenerate stars, canonical order.

    Stars are added one at a time: a new center needs degree > 1 in the graph
    left after removing the closed neighborhoods of the earlier centers. A
    packing is maximal once that remainder is a matching.
    """
    graph = to_networkx(g)
    terminal: set[int] = set()
    seen: set[int] = set()

    def grow(centers: int) -> None:
        if centers in seen:
            return
        seen.add(centers)
        hood = _closed_neighborhood(graph, centers)
        rest = graph.subgraph(v for v in graph.nodes if not hood >> v & 1)
        heavy = [v for v in rest.nodes if rest.degree(v) > 1]
        if not heavy:
            terminal.add(centers)
        for v in heavy:
            grow(centers | 1 << v)

    grow(0)
    packings = []
    for centers in sorted(terminal, key=canonical_key):
        hood = _closed_neighborhood(graph, centers)
        remainder = [e for e in g.edges if e & hood == 0]
        degrees: dict[int, int] = {}
        for e in remainder:
            for v in iter_bits(e):
                degrees[v] = degrees.get(v, 0) + 1
        if any(d > 1 for d in degrees.values()):
            raise InvariantError("star packing leaves a vertex of degree > 1 outside N[A]")
        packings.append(StarPacking(centers, len(remainder)))
    return packings


def zeta_star_packing(g: Hypergraph) -> tuple[int, StarPacking]:
    """ζ(G): largest |A| + ℓ over maximal packings."""
    best = max(star_packings(g), key=lambda sp: sp.value)
    return best.value, best


def zeta_min(g: Hypergraph) -> tuple[int, StarPacking]:
    """Smallest |A| + ℓ over maximal packings (not a regularity bound)."""
    best = min(star_packings(g), key=lambda sp: sp.value)
    return best.value, best


def independence_number(g: Hypergraph) -> int:
    """α(G) = dim Δ(G) + 1."""
    _require_graph(g)
    return independence_complex(g).dim + 1


# -----------------------------------------------------------------------------
# Complexes
# -----------------------------------------------------------------------------

def simplex_link_faces(delta: SimplicialComplex) -> list[int]:
    """Inclusion-minimal faces σ whose link is a simplex, canonical order."""
    if delta.is_void:
        raise VoidComplexError("operation undefined on the void complex")
    return minimal_masks(s for s in faces(delta) if is_simplex(link(delta, s)))


def weak_packing_statistic(delta: SimplicialComplex) -> int:
    """Largest minimal face whose link is a simplex (0 for a simplex)."""
    return max(s.bit_count() for s in simplex_link_faces(delta))
