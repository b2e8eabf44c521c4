"""
Simple hypergraphs (clutters) over a labeled vertex universe of at most 64
vertices, and the derived hypergraphs used by the regularity bounds.

A Hypergraph stands for its square-free monomial edge ideal I(H). Vertex sets
are stored as int bitmasks; VertexSubset is the checked public wrapper.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any, Union

from errors import EdgeNotFoundError, InvariantError, ParseError, TooFewEdgesError, VertexLimitError
from utils import canonical_key, full_mask, get_logger, iter_bits, mask_labels, mask_of

logger = get_logger(__name__)

MAX_VERTICES = 64
VERTICES_HEADER = "# vertices:"


def _limit() -> int:
    try:
        from config import get
    except ImportError:
        return MAX_VERTICES
    return min(MAX_VERTICES, int(get("limits.max_vertices", MAX_VERTICES)))


def check_universe(n: int) -> None:
    limit = _limit()
    if n > limit:
        raise VertexLimitError(f"{n} vertices exceed the limit of {limit}")


# -----------------------------------------------------------------------------
# VertexSubset
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexSubset:
    """Subset of a vertex universe {0, ..., universe_size - 1}."""
    bits: int
    universe_size: int

    def __post_init__(self) -> None:
        if not 0 <= self.universe_size <= MAX_VERTICES:
            raise VertexLimitError(f"universe of {self.universe_size} vertices exceeds {MAX_VERTICES}")
        if self.bits < 0 or self.bits >> self.universe_size:
            raise ValueError(f"subset {self.bits:#x} not inside a universe of {self.universe_size}")

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe_size: int) -> VertexSubset:
        return cls(mask_of(indices), universe_size)

    def _same(self, other: VertexSubset) -> None:
        if self.universe_size != other.universe_size:
            raise ValueError("vertex subsets over different universes")

    def __or__(self, other: VertexSubset) -> VertexSubset:
        self._same(other)
        return VertexSubset(self.bits | other.bits, self.universe_size)

    def __and__(self, other: VertexSubset) -> VertexSubset:
        self._same(other)
        return VertexSubset(self.bits & other.bits, self.universe_size)

    def __sub__(self, other: VertexSubset) -> VertexSubset:
        self._same(other)
        return VertexSubset(self.bits & ~other.bits, self.universe_size)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index < self.universe_size and bool(self.bits >> index & 1)

    def issubset(self, other: VertexSubset) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: VertexSubset) -> bool:
        self._same(other)
        return self.bits & other.bits == 0

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))


SubsetLike = Union[VertexSubset, int]


def as_mask(subset: SubsetLike, universe_size: int) -> int:
    """Accept a VertexSubset or a raw bitmask; validate against the universe."""
    if isinstance(subset, VertexSubset):
        if subset.universe_size != universe_size:
            raise ValueError("vertex subset belongs to a different universe")
        return subset.bits
    if subset < 0 or subset >> universe_size:
        raise ValueError(f"subset {subset:#x} not inside a universe of {universe_size}")
    return subset


# -----------------------------------------------------------------------------
# Antichain helpers
# -----------------------------------------------------------------------------

def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, deduplicated, in canonical order."""
    kept: list[int] = []
    for m in sorted(set(masks), key=canonical_key):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, deduplicated, in canonical order."""
    kept: list[int] = []
    for m in sorted(set(masks), key=canonical_key, reverse=True):
        if not any(k & m == m for k in kept):
            kept.append(m)
    return sorted(kept, key=canonical_key)


def minimalize_edges(edges: Sequence[VertexSubset]) -> list[VertexSubset]:
    if not edges:
        return []
    n = edges[0].universe_size
    return [VertexSubset(m, n) for m in minimal_masks(as_mask(e, n) for e in edges)]


def minimal_transversals(sets: Iterable[int]) -> list[int]:
    """Inclusion-minimal hitting sets of `sets` (Berge's incremental method)."""
    transversals = [0]
    for s in sorted(set(sets), key=canonical_key):
        if s == 0:
            return []
        grown: list[int] = []
        for t in transversals:
            if t & s:
                grown.append(t)
            else:
                grown.extend(t | (1 << b) for b in iter_bits(s))
        transversals = minimal_masks(grown)
    return transversals


# -----------------------------------------------------------------------------
# Hypergraph
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """Labeled vertex universe plus an antichain of nonempty edges (bitmasks, canonical order)."""
    labels: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        check_universe(n)
        if len(set(self.labels)) != n:
            raise InvariantError("duplicate vertex labels")
        full = full_mask(n)
        for e in self.edges:
            if e == 0:
                raise InvariantError("empty edge")
            if e & ~full:
                raise InvariantError(f"edge {e:#x} outside the vertex universe")
        if list(self.edges) != sorted(set(self.edges), key=canonical_key):
            raise InvariantError("edges must be distinct and in canonical order")
        for i, a in enumerate(self.edges):
            for b in self.edges[i + 1:]:
                if a & b == a:
                    raise InvariantError("edges do not form an antichain")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[int]) -> Hypergraph:
        """Build from arbitrary masks: supersets and duplicates are dropped."""
        return cls(tuple(labels), tuple(minimal_masks(edges)))

    @classmethod
    def from_label_edges(cls, edges: Iterable[Iterable[str]], labels: Sequence[str] = ()) -> Hypergraph:
        order = list(labels)
        index = {lab: i for i, lab in enumerate(order)}
        masks = []
        for edge in edges:
            m = 0
            for lab in edge:
                if lab not in index:
                    index[lab] = len(order)
                    order.append(lab)
                m |= 1 << index[lab]
            masks.append(m)
        check_universe(len(order))
        return cls.from_edges(order, masks)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def mask_from_labels(self, labels: Iterable[str]) -> int:
        return mask_of(self.index_of(lab) for lab in labels)

    def subset(self, mask: int) -> VertexSubset:
        return VertexSubset(mask, self.n)

    def edge_subsets(self) -> list[VertexSubset]:
        return [VertexSubset(e, self.n) for e in self.edges]

    def edge_labels(self, mask: int) -> list[str]:
        return mask_labels(mask, self.labels)

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertices": list(self.labels),
            "edges": [self.edge_labels(e) for e in self.edges],
        }


# -----------------------------------------------------------------------------
# Edge-list text format
# -----------------------------------------------------------------------------

def parse_label_lines(text: str, what: str = "edge") -> tuple[list[str], list[list[str]]]:
    """Split a document into (declared vertex labels, token lines)."""
    declared: list[str] = []
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.lower().startswith(VERTICES_HEADER):
                declared.extend(line[len(VERTICES_HEADER):].split())
            continue
        rows.append(line.split())
    if not rows:
        raise ParseError(f"no {what}s")
    return declared, rows


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse an edge list: one edge per line, labels whitespace-separated, '#' comments."""
    declared, rows = parse_label_lines(text, "edge")
    labels: list[str] = []
    seen: set[str] = set()
    for lab in declared + [lab for row in rows for lab in row]:
        if lab not in seen:
            seen.add(lab)
            labels.append(lab)
    check_universe(len(labels))
    index = {lab: i for i, lab in enumerate(labels)}
    masks = [mask_of(index[lab] for lab in row) for row in rows]
    h = Hypergraph.from_edges(labels, masks)
    logger.debug("parsed hypergraph: %d vertices, %d lines -> %d edges", h.n, len(rows), len(h.edges))
    return h


def to_text(h: Hypergraph) -> str:
    """Canonical serialization; the vertices header keeps isolated vertices."""
    lines = [f"{VERTICES_HEADER} {' '.join(h.labels)}".rstrip()]
    lines.extend(" ".join(h.edge_labels(e)) for e in h.edges)
    return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------------
# Derived hypergraphs
# -----------------------------------------------------------------------------

def induced_subhypergraph(h: Hypergraph, w: SubsetLike) -> Hypergraph:
    """Hypergraph on W (re-indexed in order) with the edges of H contained in W."""
    wm = as_mask(w, h.n)
    keep = list(iter_bits(wm))
    remap = {old: new for new, old in enumerate(keep)}
    edges = []
    for e in h.edges:
        if e & ~wm == 0:
            edges.append(mask_of(remap[i] for i in iter_bits(e)))
    return Hypergraph(tuple(h.labels[i] for i in keep), tuple(sorted(edges, key=canonical_key)))


def _require_edge(h: Hypergraph, e: SubsetLike) -> int:
    em = as_mask(e, h.n)
    if em not in h.edges:
        raise EdgeNotFoundError(f"{h.edge_labels(em)} is not an edge")
    return em


def delete_edge(h: Hypergraph, e: SubsetLike) -> Hypergraph:
    em = _require_edge(h, e)
    return Hypergraph(h.labels, tuple(x for x in h.edges if x != em))


def edge_fusion(h: Hypergraph, e: SubsetLike) -> Hypergraph:
    """H_E: minimal members of {E' ∪ E : E' ≠ E an edge of H}."""
    if len(h.edges) < 2:
        raise TooFewEdgesError("edge fusion needs at least two edges")
    em = _require_edge(h, e)
    return Hypergraph.from_edges(h.labels, (x | em for x in h.edges if x != em))


def uniformity(h: Hypergraph) -> int | None:
    sizes = {e.bit_count() for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_graph(h: Hypergraph) -> bool:
    return all(e.bit_count() == 2 for e in h.edges)


def vertex_degrees(h: Hypergraph) -> dict[str, int]:
    degrees = [0] * h.n
    for e in h.edges:
        for i in iter_bits(e):
            degrees[i] += 1
    return dict(zip(h.labels, degrees))


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Side-by-side union; clashing labels of the second operand get primes."""
    labels = list(h1.labels)
    taken = set(labels)
    for lab in h2.labels:
        new = lab
        while new in taken:
            new += "'"
        taken.add(new)
        labels.append(new)
    check_universe(len(labels))
    shifted = [e << h1.n for e in h2.edges]
    return Hypergraph.from_edges(labels, list(h1.edges) + shifted)


def generate_family(name: str, params: dict[str, int] | None = None, seed: int | None = None) -> Hypergraph:
    """Build a named family member; see the `families` package for the catalogue."""
    from families import generate_family as _generate
    return _generate(name, params or {}, seed)
