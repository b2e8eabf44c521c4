"""Tests for hypergraphs, the edge-list format and derived hypergraphs."""
from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from errors import EdgeNotFoundError, InvariantError, ParseError, TooFewEdgesError, VertexLimitError
from hypergraph import (
    Hypergraph,
    VertexSubset,
    delete_edge,
    disjoint_union,
    edge_fusion,
    induced_subhypergraph,
    is_graph,
    minimal_transversals,
    minimalize_edges,
    parse_hypergraph,
    to_text,
    uniformity,
    vertex_degrees,
)

C4 = "1 2\n2 3\n3 4\n4 1\n"


def test_parse_edge_list() -> None:
    h = parse_hypergraph("# a path\na b\n\nb c\n")
    assert h.labels == ("a", "b", "c")
    assert h.edges == (0b011, 0b110)
    assert is_graph(h)
    assert uniformity(h) == 2


def test_parse_drops_supersets_and_duplicates() -> None:
    h = parse_hypergraph("a b\nb a\na b c\n")
    assert h.edges == (0b011,)
    assert h.n == 3


def test_parse_vertices_header_keeps_isolated_vertices() -> None:
    h = parse_hypergraph("# vertices: a b c d\na b\n")
    assert h.n == 4
    assert vertex_degrees(h) == {"a": 1, "b": 1, "c": 0, "d": 0}
    assert parse_hypergraph(to_text(h)) == h


def test_parse_rejects_empty_document() -> None:
    with pytest.raises(ParseError):
        parse_hypergraph("# nothing here\n\n")


def test_vertex_limit() -> None:
    labels = [f"v{i}" for i in range(65)]
    with pytest.raises(VertexLimitError):
        Hypergraph.from_edges(labels, [0b11])


def test_invariants_enforced() -> None:
    with pytest.raises(InvariantError):
        Hypergraph(("a", "b"), (0b01, 0b11))
    with pytest.raises(InvariantError):
        Hypergraph(("a", "a"), (0b01,))
    with pytest.raises(InvariantError):
        Hypergraph(("a", "b"), (0b10, 0b01))


def test_vertex_subset_operations() -> None:
    a = VertexSubset.from_indices([0, 2], 4)
    b = VertexSubset.from_indices([2, 3], 4)
    assert (a | b).indices() == (0, 2, 3)
    assert (a & b).indices() == (2,)
    assert (a - b).indices() == (0,)
    assert 2 in a and 1 not in a
    assert not a.isdisjoint(b)
    assert (a & b).issubset(a)
    with pytest.raises(ValueError):
        VertexSubset(0b10000, 4)


def test_minimal_transversals() -> None:
    assert minimal_transversals([0b011, 0b110]) == [0b010, 0b101]
    assert minimal_transversals([]) == [0]


def test_delete_edge() -> None:
    h = parse_hypergraph(C4)
    e = h.mask_from_labels(["1", "2"])
    assert len(delete_edge(h, e).edges) == 3
    with pytest.raises(EdgeNotFoundError):
        delete_edge(h, h.mask_from_labels(["1", "3"]))


def test_edge_fusion_of_four_cycle() -> None:
    h = parse_hypergraph(C4)
    fused = edge_fusion(h, h.mask_from_labels(["1", "2"]))
    assert sorted(sorted(fused.edge_labels(e)) for e in fused.edges) == [["1", "2", "3"], ["1", "2", "4"]]
    with pytest.raises(TooFewEdgesError):
        edge_fusion(parse_hypergraph("a b\n"), 0b11)


def test_induced_subhypergraph() -> None:
    h = parse_hypergraph(C4)
    sub = induced_subhypergraph(h, h.mask_from_labels(["1", "2", "3"]))
    assert sub.labels == ("1", "2", "3")
    assert len(sub.edges) == 2


def test_disjoint_union_renames_clashes() -> None:
    h = parse_hypergraph("a b\n")
    u = disjoint_union(h, h)
    assert u.labels == ("a", "b", "a'", "b'")
    assert u.edges == (0b0011, 0b1100)


def test_to_dict() -> None:
    h = parse_hypergraph("x y z\n")
    assert h.to_dict() == {"vertices": ["x", "y", "z"], "edges": [["x", "y", "z"]]}


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=63), max_size=8))
def test_from_edges_yields_antichain(masks: list[int]) -> None:
    h = Hypergraph.from_edges([str(i) for i in range(6)], masks)
    for a in h.edges:
        assert any(a & m == a for m in masks)
        for b in h.edges:
            assert a == b or a & b != a
    for m in masks:
        assert any(e & m == e for e in h.edges)


LABELS6 = [str(i) for i in range(6)]
edge_masks = st.lists(st.integers(min_value=1, max_value=63), min_size=2, max_size=8)


@settings(max_examples=50, deadline=None)
@given(edge_masks, st.data())
def test_fused_edges_strictly_contain_the_fused_edge(masks: list[int], data: st.DataObject) -> None:
    h = Hypergraph.from_edges(LABELS6, masks)
    if len(h.edges) < 2:
        return
    e = data.draw(st.sampled_from(h.edges))
    fused = edge_fusion(h, e)
    assert fused.labels == h.labels
    assert fused.edges
    for f in fused.edges:
        assert f & e == e
        assert f.bit_count() >= e.bit_count() + 1
    for other in h.edges:
        if other != e:
            assert any(f & (other | e) == f for f in fused.edges)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=63), max_size=8))
def test_minimalize_edges_is_idempotent(masks: list[int]) -> None:
    subsets = [VertexSubset(m, 6) for m in masks]
    once = minimalize_edges(subsets)
    assert minimalize_edges(once) == once
    assert len(set(once)) == len(once)
    for a in once:
        assert not any(b != a and b.issubset(a) for b in once)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=63), max_size=8))
def test_inducing_on_every_vertex_is_the_identity(masks: list[int]) -> None:
    h = Hypergraph.from_edges(LABELS6, masks)
    assert induced_subhypergraph(h, h.vertex_mask) == h
