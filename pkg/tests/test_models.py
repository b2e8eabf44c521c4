"""Tests for models."""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from complex import simplex
from errors import FieldError
from models import (
    BettiVector,
    Certificate,
    CertificateKind,
    Clause,
    EdgeFamily,
    FamilyKind,
    FieldPrime,
    Method,
    PropertyReport,
    RegularityReport,
    SheddingCertificate,
    StarPacking,
    Status,
)


def test_field_prime() -> None:
    assert FieldPrime(3).p == 3
    assert FieldPrime.of(FieldPrime(5)).p == 5
    for bad in (0, 1, 4, 2**31 + 11):
        with pytest.raises(FieldError):
            FieldPrime(bad)


def test_betti_vector() -> None:
    betti = BettiVector({1: 1}, top=1, field_char=2)
    assert betti[1] == 1 and betti[0] == 0 and betti[7] == 0
    assert betti.nonzero_degrees() == [1]
    assert not betti.is_acyclic()
    assert betti.euler_characteristic() == -1
    assert betti.to_dict() == {"-1": 0, "0": 0, "1": 1}


def test_certificate_to_dict() -> None:
    cert = Certificate(CertificateKind.SUBSET, 0b101, 2)
    assert cert.to_dict(["a", "b", "c"]) == {
        "kind": "subset", "vertices": ["a", "c"], "degree": 2, "homology_degree": 1,
    }


def test_regularity_report_reg_ideal() -> None:
    cert = Certificate(CertificateKind.FACE, 0, 0)
    zero = RegularityReport(0, cert, Method.LINKS, 2, ("a",), zero_ideal=True)
    assert zero.reg_ideal is None
    plain = RegularityReport(0, cert, Method.LINKS, 2, ("a",))
    assert plain.reg_ideal == 1
    assert plain.to_dict()["method"] == "links"


def test_edge_family() -> None:
    edges = (0b0011, 0b1100, 0b0111)
    family = EdgeFamily((0, 2), FamilyKind.COLLAGE)
    assert len(family) == 2
    assert family.masks(edges) == [0b0011, 0b0111]
    assert family.weight(edges) == 3
    d = family.to_dict(edges, ["a", "b", "c", "d"])
    assert d == {"kind": "collage", "size": 2, "weight": 3, "edges": [["a", "b"], ["a", "b", "c"]]}


def test_star_packing_value() -> None:
    packing = StarPacking(0b101, 2)
    assert packing.value == 4
    assert packing.to_dict(["a", "b", "c"])["centers"] == ["a", "c"]


def test_shedding_certificate_order() -> None:
    leaf = SheddingCertificate(simplex(["a", "b"]))
    assert leaf.decomposable and leaf.is_leaf
    assert leaf.order() == [] and list(leaf.steps()) == []
    root = SheddingCertificate(simplex(["a", "b"]), vertex=1, link_branch=leaf, deletion_branch=leaf)
    assert root.order() == [1]
    assert list(root.steps()) == [root]
    assert root.to_dict()["shedding_order"] == ["b"]
    stuck = SheddingCertificate(simplex(["a"]), witness=simplex(["a"]))
    assert not stuck.decomposable
    assert stuck.to_dict()["witness"] == [["a"]]


def test_property_report_status() -> None:
    report = PropertyReport("demo", "a b | ab", 2)
    assert report.status is Status.SKIP
    report.clauses.append(Clause("gated", "eq", None, None, False, hypothesis=False))
    assert report.status is Status.SKIP
    assert report.headline() is None
    report.clauses.append(Clause("x <= y", "le", 1, 2, True))
    assert report.status is Status.PASS and report.passed
    report.clauses.append(Clause("y <= x", "le", 2, 1, False))
    assert report.status is Status.FAIL
    d = report.to_dict()
    assert d["relation"] == "y <= x"
    assert d["left"] == 2 and d["right"] == 1
    assert d["hypothesis_satisfied"] is True
    assert d["status"] == "fail"
    assert len(d["clauses"]) == 3
