"""
Simplicial complexes by facet representation: independence complexes and the
link / deletion / induced-subcomplex / pure-skeleton calculus.

Every operation keeps the vertex universe fixed. A universe vertex lying in
no facet is a non-vertex of the complex (a singleton minimal nonface), which
is how deletions and links mark the vertices they removed.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any

from errors import DimensionError, InvariantError, NotAFaceError, ParseError, VoidComplexError
from hypergraph import (
    Hypergraph,
    SubsetLike,
    as_mask,
    check_universe,
    maximal_masks,
    minimal_transversals,
    parse_label_lines,
    VERTICES_HEADER,
)
from utils import canonical_key, full_mask, iter_bits, mask_labels, mask_of

EMPTY_FACET_TOKEN = "{}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Facets (bitmasks, canonical order) over a labeled universe.

    The void complex has no faces at all; the empty complex {∅} has the
    single facet 0.
    """
    labels: tuple[str, ...]
    facets: tuple[int, ...]
    is_void: bool = False

    def __post_init__(self) -> None:
        n = len(self.labels)
        check_universe(n)
        if self.is_void != (len(self.facets) == 0):
            raise InvariantError("a complex is void exactly when it has no facets")
        full = full_mask(n)
        if any(f & ~full for f in self.facets):
            raise InvariantError("facet outside the vertex universe")
        if list(self.facets) != sorted(set(self.facets), key=canonical_key):
            raise InvariantError("facets must be distinct and in canonical order")
        for i, a in enumerate(self.facets):
            for b in self.facets[i + 1:]:
                if a & b == a:
                    raise InvariantError("facets do not form an antichain")

    @property
    def universe_size(self) -> int:
        return len(self.labels)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical form used as a memoization key."""
        return (self.universe_size, self.facets)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def dim(self) -> int:
        if self.is_void:
            raise VoidComplexError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def vertices(self) -> list[int]:
        return list(iter_bits(self.vertex_mask))

    def subset_labels(self, mask: int) -> list[str]:
        return mask_labels(mask, self.labels)

    def to_dict(self) -> dict[str, Any]:
        return {
            "universe": list(self.labels),
            "facets": [self.subset_labels(f) for f in self.facets],
            "void": self.is_void,
        }


# -----------------------------------------------------------------------------
# Constructors
# -----------------------------------------------------------------------------

def make_complex(labels: Sequence[str], facets: Iterable[int]) -> SimplicialComplex:
    """Complex generated by the given faces (non-maximal ones are absorbed)."""
    tops = maximal_masks(facets)
    return SimplicialComplex(tuple(labels), tuple(tops), is_void=not tops)


def void_complex(labels: Sequence[str]) -> SimplicialComplex:
    return SimplicialComplex(tuple(labels), (), is_void=True)


def empty_complex(labels: Sequence[str] = ()) -> SimplicialComplex:
    """{∅}: no vertices, one (empty) face."""
    return SimplicialComplex(tuple(labels), (0,))


def simplex(labels: Sequence[str], mask: int | None = None) -> SimplicialComplex:
    return SimplicialComplex(tuple(labels), (full_mask(len(labels)) if mask is None else mask,))


def cone(delta: SimplicialComplex, apex: str = "w") -> SimplicialComplex:
    """Cone with a new apex vertex appended to the universe."""
    _require_nonvoid(delta)
    label = apex
    while label in delta.labels:
        label += "'"
    bit = 1 << delta.universe_size
    return SimplicialComplex(delta.labels + (label,), tuple(sorted((f | bit for f in delta.facets), key=canonical_key)))


def parse_facets(text: str) -> SimplicialComplex:
    """Facet list in the edge-list format; a `{}` line is the empty facet."""
    declared, rows = parse_label_lines(text, "facet")
    labels: list[str] = []
    seen: set[str] = set()
    for lab in declared + [lab for row in rows for lab in row if lab != EMPTY_FACET_TOKEN]:
        if lab not in seen:
            seen.add(lab)
            labels.append(lab)
    check_universe(len(labels))
    index = {lab: i for i, lab in enumerate(labels)}
    facets = []
    for row in rows:
        if EMPTY_FACET_TOKEN in row and len(row) > 1:
            raise ParseError("'{}' must stand alone on its line")
        facets.append(mask_of(index[lab] for lab in row if lab != EMPTY_FACET_TOKEN))
    return make_complex(labels, facets)


def to_facet_text(delta: SimplicialComplex) -> str:
    lines = [f"{VERTICES_HEADER} {' '.join(delta.labels)}".rstrip()]
    for f in delta.facets:
        lines.append(" ".join(delta.subset_labels(f)) if f else EMPTY_FACET_TOKEN)
    return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------------
# Stanley–Reisner correspondence
# -----------------------------------------------------------------------------

def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Δ(H): faces are the vertex sets containing no edge.

    Facets are the complements of the minimal vertex covers of H.
    """
    full = full_mask(h.n)
    covers = minimal_transversals(h.edges)
    return make_complex(h.labels, (full & ~c for c in covers))


def minimal_nonfaces(delta: SimplicialComplex) -> Hypergraph:
    """The simple hypergraph H with Δ(H) = Δ."""
    _require_nonvoid(delta)
    full = full_mask(delta.universe_size)
    nonfaces = minimal_transversals(full & ~f for f in delta.facets)
    return Hypergraph(delta.labels, tuple(nonfaces))


# -----------------------------------------------------------------------------
# Faces
# -----------------------------------------------------------------------------

def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.is_void:
        raise VoidComplexError("operation undefined on the void complex")


@lru_cache(maxsize=4096)
def faces(delta: SimplicialComplex, dim: int | None = None) -> tuple[int, ...]:
    """All faces (or those of one dimension) in canonical order."""
    found: set[int] = set()
    for f in delta.facets:
        bits = [1 << i for i in iter_bits(f)]
        sizes = range(len(bits) + 1) if dim is None else [dim + 1]
        for k in sizes:
            if 0 <= k <= len(bits):
                found.update(sum(c) for c in combinations(bits, k))
    return tuple(sorted(found, key=canonical_key))


def f_vector(delta: SimplicialComplex) -> list[int]:
    """Face counts f_{-1}, f_0, ..., f_dim."""
    _require_nonvoid(delta)
    counts = [0] * (delta.dim + 2)
    for s in faces(delta):
        counts[s.bit_count()] += 1
    return counts


def is_face(delta: SimplicialComplex, sigma: SubsetLike) -> bool:
    s = as_mask(sigma, delta.universe_size)
    return any(f & s == s for f in delta.facets)


def is_simplex(delta: SimplicialComplex) -> bool:
    return len(delta.facets) == 1


# -----------------------------------------------------------------------------
# Link, deletion, restriction, skeleta
# -----------------------------------------------------------------------------

def link(delta: SimplicialComplex, sigma: SubsetLike) -> SimplicialComplex:
    """Faces τ disjoint from σ with τ ∪ σ in Δ."""
    _require_nonvoid(delta)
    s = as_mask(sigma, delta.universe_size)
    over = [f & ~s for f in delta.facets if f & s == s]
    if not over:
        raise NotAFaceError(f"{delta.subset_labels(s)} is not a face")
    return make_complex(delta.labels, over)


def _vertex_bit(delta: SimplicialComplex, v: int) -> int:
    if not 0 <= v < delta.universe_size:
        raise ValueError(f"vertex index {v} outside the universe")
    return 1 << v


def deletion(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces avoiding v."""
    bit = _vertex_bit(delta, v)
    return make_complex(delta.labels, (f & ~bit for f in delta.facets))


def induced_subcomplex(delta: SimplicialComplex, s: SubsetLike) -> SimplicialComplex:
    """Faces of Δ contained in S."""
    sm = as_mask(s, delta.universe_size)
    return make_complex(delta.labels, (f & sm for f in delta.facets))


def pure_skeleton(delta: SimplicialComplex, n: int) -> SimplicialComplex:
    """Γ^[n]: the subcomplex generated by the n-dimensional faces."""
    _require_nonvoid(delta)
    if n < -1 or n > delta.dim:
        raise DimensionError(f"pure skeleton dimension {n} outside [-1, {delta.dim}]")
    return make_complex(delta.labels, faces(delta, n))


def complex_vertex_degree(delta: SimplicialComplex, v: int) -> int:
    """Number of minimal nonfaces containing v (0 iff Δ is a cone with apex v)."""
    bit = _vertex_bit(delta, v)
    return sum(1 for e in minimal_nonfaces(delta).edges if e & bit)


def dimension(delta: SimplicialComplex) -> int:
    return delta.dim


def vertex_mask(delta: SimplicialComplex) -> int:
    """Vertices actually used by some face (universe minus singleton nonfaces)."""
    return delta.vertex_mask
