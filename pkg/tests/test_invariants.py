"""Tests for matchings, collages, star packings and related statistics."""
from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from complex import independence_complex, simplex
from errors import EdgeNotFoundError, IdenticalEdgesError, NotAGraphError, TooFewEdgesError
from hypergraph import Hypergraph, generate_family, parse_hypergraph
from invariants import (
    collage_weight,
    independence_number,
    induced_matching_number,
    is_induced_matching,
    is_t_separated,
    is_two_collage,
    matching_number,
    max_induced_matching,
    max_weight_induced_matching,
    maximal_2separated_families,
    min_two_collage,
    min_weight_two_collage,
    minimax_matching_number,
    simplex_link_faces,
    star_packings,
    weak_packing_statistic,
    zeta_min,
    zeta_star_packing,
)
from models import FamilyKind

P4 = "1 2\n2 3\n3 4\n"
C5 = "1 2\n2 3\n3 4\n4 5\n5 1\n"


def test_path_on_four_vertices() -> None:
    g = parse_hypergraph(P4)
    assert matching_number(g) == 2
    assert minimax_matching_number(g) == 1
    assert induced_matching_number(g) == 1
    assert zeta_star_packing(g)[0] == 1
    assert zeta_min(g)[0] == 1
    assert independence_number(g) == 2


def test_five_cycle() -> None:
    g = parse_hypergraph(C5)
    assert matching_number(g) == 2
    assert minimax_matching_number(g) == 2
    assert induced_matching_number(g) == 1
    assert independence_number(g) == 2
    size, family = min_two_collage(g)
    assert size == 2
    assert is_two_collage(g, family)


@pytest.mark.parametrize("text", ["c 1\nc 2\nc 3\n", "a b\n"])
def test_stars_have_zeta_one(text: str) -> None:
    assert zeta_star_packing(parse_hypergraph(text))[0] == 1


def test_star_packing_centers() -> None:
    g = parse_hypergraph("c 1\nc 2\nc 3\n")
    (packing,) = star_packings(g)
    assert packing.to_dict(g.labels) == {"centers": ["c"], "remainder_edges": 0, "zeta_P": 1}


def test_star_packing_grows_in_the_remainder() -> None:
    # one side of K_{2,3} is independent with degree 2, but each star swallows both hubs
    g = parse_hypergraph("u1 x\nu1 y\nu2 x\nu2 y\nu3 x\nu3 y\n")
    packings = star_packings(g)
    assert all(p.centers.bit_count() == 1 and p.remainder_edges == 0 for p in packings)
    assert len(packings) == 5
    assert zeta_star_packing(g)[0] == 1 <= matching_number(g)


def test_star_packing_of_matching_is_the_matching() -> None:
    g = parse_hypergraph("a b\nc d\n")
    (packing,) = star_packings(g)
    assert packing.centers == 0
    assert packing.value == 2


def test_induced_matching_witness() -> None:
    g = parse_hypergraph(P4)
    family = max_induced_matching(g)
    assert family.kind is FamilyKind.INDUCED_MATCHING
    assert is_induced_matching(g, family)
    assert not is_induced_matching(g, (0, 2))


def test_weighted_induced_matching() -> None:
    h = parse_hypergraph("a b c\nd e\n")
    family = max_weight_induced_matching(h)
    assert family.weight(h.edges) == 3


def test_separation() -> None:
    abc, abd, ade = 0b00111, 0b01011, 0b11001
    assert not is_t_separated(abc, abd, 2)
    assert is_t_separated(abc, ade, 2)
    assert is_t_separated(abc, abd, 1)
    with pytest.raises(IdenticalEdgesError):
        is_t_separated(abc, abc, 1)


def test_nearly_equal_edges() -> None:
    h = parse_hypergraph("a b c\na b d\n")
    families = maximal_2separated_families(h)
    assert [f.members for f in families] == [(0,), (1,)]
    assert all(is_two_collage(h, f) for f in families)
    assert min_two_collage(h)[0] == 1
    assert min_weight_two_collage(h)[0] == 2


def test_separation_family_collages() -> None:
    h = generate_family("hs", {"s": 3})
    assert min_two_collage(h)[0] == 3
    weight, family = min_weight_two_collage(h)
    assert weight == 6
    assert collage_weight(h, family) == 6
    assert matching_number(h) == 1
    assert minimax_matching_number(h) == 1


def test_edgeless_inputs() -> None:
    h = Hypergraph(("a", "b"), ())
    assert matching_number(h) == 0
    assert minimax_matching_number(h) == 0
    assert [f.members for f in maximal_2separated_families(h)] == [()]
    with pytest.raises(TooFewEdgesError):
        min_two_collage(h)
    with pytest.raises(TooFewEdgesError):
        min_weight_two_collage(h)


def test_family_validation() -> None:
    g = parse_hypergraph(P4)
    with pytest.raises(EdgeNotFoundError):
        is_two_collage(g, (7,))
    with pytest.raises(EdgeNotFoundError):
        collage_weight(g, (0, 0))


def test_graph_only_statistics() -> None:
    h = parse_hypergraph("a b c\n")
    with pytest.raises(NotAGraphError):
        independence_number(h)
    with pytest.raises(NotAGraphError):
        star_packings(h)


def test_weak_packing_statistic() -> None:
    delta = independence_complex(parse_hypergraph(C5))
    assert weak_packing_statistic(delta) == 2
    assert len(simplex_link_faces(delta)) == 5
    assert weak_packing_statistic(simplex(["a", "b"])) == 0


graphs = st.sets(st.sampled_from(list(combinations(range(6), 2))), max_size=10)


def _graph(pairs: set[tuple[int, int]]) -> Hypergraph:
    return Hypergraph.from_edges([str(i) for i in range(6)], [(1 << a) | (1 << b) for a, b in pairs])


@settings(max_examples=50, deadline=None)
@given(graphs)
def test_matching_chain(pairs: set[tuple[int, int]]) -> None:
    g = _graph(pairs)
    assert induced_matching_number(g) <= minimax_matching_number(g) <= matching_number(g)
    if g.edges:
        assert min_two_collage(g)[0] == minimax_matching_number(g)


@settings(max_examples=30, deadline=None)
@given(graphs)
def test_zeta_between_min_and_matching_number(pairs: set[tuple[int, int]]) -> None:
    g = _graph(pairs)
    assert zeta_min(g)[0] <= zeta_star_packing(g)[0] <= matching_number(g)
