"""
Data models for regtool: coefficient fields, Betti vectors, regularity
reports and certificates, edge families, star packings, shedding
certificates and property reports.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from complex import SimplicialComplex
from errors import FieldError
from utils import is_prime, mask_labels


class Method(str, Enum):
    AUTO = "auto"
    SUBSETS = "subsets"
    LINKS = "links"
    VD = "vd"


class CertificateKind(str, Enum):
    SUBSET = "subset"
    FACE = "face"


class FamilyKind(str, Enum):
    MATCHING = "matching"
    INDUCED_MATCHING = "induced-matching"
    COLLAGE = "collage"
    SEPARATED_FAMILY = "separated-family"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class FieldPrime:
    """Coefficient field GF(p)."""
    p: int

    def __post_init__(self) -> None:
        if not (2 <= self.p < 2**31 and is_prime(self.p)):
            raise FieldError(f"field characteristic must be a prime below 2^31, got {self.p}")

    @classmethod
    def of(cls, p: int | FieldPrime) -> FieldPrime:
        return p if isinstance(p, FieldPrime) else cls(int(p))


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over GF(p), degrees -1..top; absent degrees are 0."""
    dims: dict[int, int]
    top: int
    field_char: int = 2

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def nonzero_degrees(self) -> list[int]:
        return sorted(i for i, b in self.dims.items() if b)

    def is_acyclic(self) -> bool:
        return not self.nonzero_degrees()

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in self.dims.items())

    def to_dict(self) -> dict[str, Any]:
        return {str(i): self[i] for i in range(-1, self.top + 1)}


@dataclass(frozen=True)
class Certificate:
    """Witness for reg >= degree: H̃_{degree-1} of Δ[vertices] (subset) or link_Δ vertices (face) is nonzero."""
    kind: CertificateKind
    vertices: int
    degree: int

    def to_dict(self, labels: Sequence[str]) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "vertices": mask_labels(self.vertices, labels),
            "degree": self.degree,
            "homology_degree": self.degree - 1,
        }


@dataclass(frozen=True)
class RegularityReport:
    """reg(R/I_Δ) with its witnessing certificate."""
    value: int
    certificate: Certificate
    method: Method
    field_char: int
    labels: tuple[str, ...] = ()
    zero_ideal: bool = False
    capped: bool = False

    @property
    def reg_ideal(self) -> int | None:
        """reg(I) = reg(R/I) + 1 for a nonzero ideal."""
        return None if self.zero_ideal else self.value + 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "reg_RI": self.value,
            "reg_I": self.reg_ideal,
            "method": self.method.value,
            "char": self.field_char,
            "certificate": self.certificate.to_dict(self.labels),
            "capped": self.capped,
        }


@dataclass(frozen=True)
class EdgeFamily:
    """Indices into a hypergraph's edge tuple, tagged with the property they satisfy."""
    members: tuple[int, ...]
    kind: FamilyKind

    def __len__(self) -> int:
        return len(self.members)

    def masks(self, edges: Sequence[int]) -> list[int]:
        return [edges[i] for i in self.members]

    def weight(self, edges: Sequence[int]) -> int:
        return sum(edges[i].bit_count() - 1 for i in self.members)

    def to_dict(self, edges: Sequence[int], labels: Sequence[str]) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "size": len(self.members),
            "weight": self.weight(edges),
            "edges": [mask_labels(edges[i], labels) for i in self.members],
        }


@dataclass(frozen=True)
class StarPacking:
    """Centers A of a maximal center-separated packing of nondegenerate stars, plus the remainder matching size."""
    centers: int
    remainder_edges: int

    @property
    def value(self) -> int:
        return self.centers.bit_count() + self.remainder_edges

    def to_dict(self, labels: Sequence[str]) -> dict[str, Any]:
        return {
            "centers": mask_labels(self.centers, labels),
            "remainder_edges": self.remainder_edges,
            "zeta_P": self.value,
        }


@dataclass(frozen=True)
class SheddingCertificate:
    """Decomposition tree down to simplex leaves, or a failure witness.

    Internal node: `vertex` sheds and both children decompose. Failure node:
    `witness` is a complex none of whose vertices shed.
    """
    complex: SimplicialComplex
    vertex: int | None = None
    link_branch: SheddingCertificate | None = None
    deletion_branch: SheddingCertificate | None = None
    witness: SimplicialComplex | None = None

    @property
    def decomposable(self) -> bool:
        return self.witness is None

    @property
    def is_leaf(self) -> bool:
        return self.decomposable and self.vertex is None

    def order(self) -> list[int]:
        """Shedding order: the deletion-branch spine."""
        out: list[int] = []
        node: SheddingCertificate | None = self
        while node is not None and node.vertex is not None:
            out.append(node.vertex)
            node = node.deletion_branch
        return out

    def steps(self) -> Iterator[SheddingCertificate]:
        """Every internal node of the tree (each shedding step), preorder."""
        if self.vertex is None:
            return
        yield self
        for child in (self.link_branch, self.deletion_branch):
            if child is not None:
                yield from child.steps()

    def to_dict(self) -> dict[str, Any]:
        labels = self.complex.labels
        return {
            "vd": self.decomposable,
            "shedding_order": [labels[v] for v in self.order()] if self.decomposable else [],
            "witness": self.witness.to_dict()["facets"] if self.witness is not None else None,
        }


@dataclass
class Clause:
    """One asserted relation `left <op> right` inside a property check."""
    label: str
    op: str
    left: Any
    right: Any
    holds: bool
    hypothesis: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "op": self.op,
            "left": self.left,
            "right": self.right,
            "holds": self.holds,
            "hypothesis": self.hypothesis,
        }


@dataclass
class PropertyReport:
    """Outcome of one property check on one instance over one field."""
    property_id: str
    instance: str
    field_char: int
    clauses: list[Clause] = field(default_factory=list)
    certificates: dict[str, Any] = field(default_factory=dict)
    instance_id: str = ""
    seed: int | None = None

    @property
    def hypothesis_satisfied(self) -> bool:
        return any(c.hypothesis for c in self.clauses)

    @property
    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if c.hypothesis and not c.holds]

    @property
    def status(self) -> Status:
        if not self.hypothesis_satisfied:
            return Status.SKIP
        return Status.FAIL if self.failures else Status.PASS

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def headline(self) -> Clause | None:
        """First failing clause, else the first checked one."""
        failing = self.failures
        if failing:
            return failing[0]
        return next((c for c in self.clauses if c.hypothesis), None)

    def to_dict(self) -> dict[str, Any]:
        head = self.headline()
        return {
            "property": self.property_id,
            "instance_id": self.instance_id,
            "instance": self.instance,
            "char": self.field_char,
            "seed": self.seed,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "relation": head.label if head else None,
            "left": head.left if head else None,
            "right": head.right if head else None,
            "status": self.status.value,
            "passed": self.passed,
            "clauses": [c.to_dict() for c in self.clauses],
            "certificates": dict(self.certificates),
        }