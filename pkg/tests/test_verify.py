"""Tests for the property checks."""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from complex import independence_complex, parse_facets
from errors import EdgeNotFoundError, NotAGraphError, PartitionError, TooFewEdgesError
from hypergraph import generate_family, parse_hypergraph
from memo import MemoCache
from models import Status
from verify import (
    ReportBuilder,
    check_collage_bounds,
    check_dichotomy,
    check_edge_split,
    check_km_subadditivity,
    check_method_agreement,
    check_separation_example,
    check_single_collage,
    check_union_additivity,
    check_vd_formula,
    check_zeta_bound,
    describe,
    holds,
)

C5 = "1 2\n2 3\n3 4\n4 5\n5 1\n"
RP2 = "1 2 4\n1 2 6\n1 3 5\n1 3 6\n1 4 5\n2 3 4\n2 3 5\n2 5 6\n3 4 6\n4 5 6\n"


def clause(report, label):
    return next(c for c in report.clauses if c.label == label)


def test_holds() -> None:
    assert holds("le", 1, 1) and holds("lt", 1, 2) and holds("ge", 2, 1)
    assert holds("eq", [1], [1]) and holds("in", 2, [1, 2])
    assert not holds("lt", 2, 2)
    with pytest.raises(ValueError):
        holds("approx", 1, 1)


def test_report_builder_gating() -> None:
    b = ReportBuilder("demo", "instance", 3)
    assert b.add("ok", "le", 1, 2)
    assert not b.add("gated", "le", 5, 2, hypothesis=False)
    report = b.done()
    assert report.status is Status.PASS
    assert report.field_char == 3


def test_describe() -> None:
    assert describe(parse_hypergraph("a b\nb c\n")) == "a b c | ab bc"


def test_collage_bounds_on_five_cycle() -> None:
    report = check_collage_bounds(parse_hypergraph(C5), 2)
    assert report.status is Status.PASS
    assert report.certificates["reg_RI"] == 2
    assert clause(report, "collage size == nu_min").hypothesis


def test_collage_bounds_on_nearly_equal_edges() -> None:
    report = check_collage_bounds(parse_hypergraph("a b c\na b d\n"), 3)
    assert report.status is Status.PASS
    assert not clause(report, "collage size == nu_min").hypothesis
    assert clause(report, "reg <= (d-1) c").right == 2


def test_collage_bounds_need_edges() -> None:
    from hypergraph import Hypergraph

    with pytest.raises(TooFewEdgesError):
        check_collage_bounds(Hypergraph(("a",), ()))


def test_km_subadditivity() -> None:
    h = parse_hypergraph(C5)
    report = check_km_subadditivity(h, [[0, 1], [2, 3, 4]], 2)
    assert report.status is Status.PASS
    with pytest.raises(PartitionError):
        check_km_subadditivity(h, [[0, 1], [2]])
    with pytest.raises(EdgeNotFoundError):
        check_km_subadditivity(h, [[0, 1, 2, 3, 4, 9]])


def test_edge_split() -> None:
    h = parse_hypergraph(C5)
    for e in h.edges:
        assert check_edge_split(h, e, 3).status is Status.PASS
    with pytest.raises(TooFewEdgesError):
        check_edge_split(parse_hypergraph("a b\n"), 0b11)


def test_single_collage() -> None:
    assert check_single_collage(parse_hypergraph("a b c\na b d\n")).status is Status.PASS
    assert check_single_collage(parse_hypergraph("a b\nc d\n")).status is Status.SKIP


def test_union_additivity() -> None:
    h = parse_hypergraph(C5)
    report = check_union_additivity(h, parse_hypergraph("a b\n"), 2)
    assert report.status is Status.PASS
    assert report.clauses[0].left == 3


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_separation_example(s: int) -> None:
    report = check_separation_example(s, 2)
    assert report.status is Status.PASS
    assert clause(report, "2 nu_min < reg").hypothesis is (s >= 2)


def test_method_agreement_over_two_fields() -> None:
    delta = parse_facets(RP2)
    for q in (2, 3):
        assert check_method_agreement(delta, q).status is Status.PASS


def test_dichotomy_on_pentagon() -> None:
    delta = independence_complex(parse_hypergraph(C5))
    report = check_dichotomy(delta, 2, MemoCache("t"), locality_max_face=2)
    assert report.status is Status.PASS
    assert clause(report, "reg <= reg link v + 1 for some v of degree > 1").hypothesis


def test_vd_formula_on_pentagon() -> None:
    delta = independence_complex(parse_hypergraph(C5))
    report = check_vd_formula(delta, 3, locality_max_face=2)
    assert report.status is Status.PASS
    assert report.certificates["shedding_order"] == ["1", "3", "4"]


def test_vd_formula_gated_without_decomposability() -> None:
    report = check_vd_formula(parse_facets("a b\nc d\n"), 2, locality_max_face=2)
    assert not clause(report, "vd implies sequentially CM").hypothesis
    assert report.status is not Status.FAIL


def test_vd_formula_clauses_on_pentagon() -> None:
    delta = independence_complex(parse_hypergraph(C5))
    report = check_vd_formula(delta, 2, locality_max_face=2)
    for name in "12345":
        recursion = clause(report, f"reg == max(reg del {name}, reg link {name} + 1)")
        assert recursion.hypothesis and recursion.holds
        assert recursion.left == recursion.right == 2
        lifted = clause(report, f"H_1(Δ) != 0 lifted from link {name}")
        assert lifted.holds and lifted.left == 1
    locality = clause(report, "shedding vertices shed in links")
    assert locality.hypothesis and locality.left == 0
    splits = [c for c in report.clauses if c.label.startswith("betti splitting at")]
    assert splits and all(c.holds for c in splits)
    assert clause(report, "betti splitting at 1").left == [0, 1, 0]
    assert clause(report, "vd recursion == subsets").holds


def test_vd_formula_on_contractible_path() -> None:
    delta = independence_complex(parse_hypergraph("1 2\n2 3\n3 4\n"))
    report = check_vd_formula(delta, 2, locality_max_face=2)
    assert report.status is Status.PASS
    labels = [c.label for c in report.clauses]
    assert "reg == max(reg del 3, reg link 3 + 1)" in labels
    assert "reg == max(reg del 1, reg link 1 + 1)" not in labels
    assert not any("lifted" in label for label in labels)
    assert clause(report, "reg == max(reg del 3, reg link 3 + 1)").right == 1


def test_vd_formula_without_shedding_vertices_is_skipped() -> None:
    report = check_vd_formula(parse_facets("a b\nc d\n"), 2, locality_max_face=2)
    assert not any(c.label.startswith("reg == max") for c in report.clauses)
    assert not clause(report, "shedding vertices shed in links").hypothesis
    assert not any(c.label.startswith("betti splitting") for c in report.clauses)
    assert "shedding_order" not in report.certificates
    assert report.status is Status.SKIP


@pytest.mark.parametrize("text", [C5, "1 2\n2 3\n3 4\n", "c 1\nc 2\nc 3\n", "u1 x\nu1 y\nu2 x\nu2 y\nu3 x\nu3 y\n"])
def test_zeta_bound(text: str) -> None:
    assert check_zeta_bound(parse_hypergraph(text), 2).status is Status.PASS


def test_zeta_bound_requires_graph() -> None:
    with pytest.raises(NotAGraphError):
        check_zeta_bound(generate_family("hs", {"s": 2}))
