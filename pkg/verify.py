"""
Property checks: each bound or identity relating regularity to the
combinatorial invariants, evaluated exactly on one instance and recorded as a
PropertyReport of clauses. A clause whose hypothesis fails is kept but never
counts as a pass.
"""
from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from complex import (
    SimplicialComplex,
    deletion,
    faces,
    independence_complex,
    link,
    minimal_nonfaces,
)
from decomp import is_sequentially_cm, is_shedding_vertex, is_vertex_decomposable
from errors import CertificateError, EdgeNotFoundError, PartitionError, TooFewEdgesError
from homology import reduced_betti
from hypergraph import Hypergraph, delete_edge, disjoint_union, edge_fusion, is_graph, uniformity, vertex_degrees
from invariants import (
    independence_number,
    is_two_collage,
    matching_number,
    max_induced_matching,
    max_weight_induced_matching,
    maximal_2separated_families,
    min_maximal_matching,
    min_two_collage,
    min_weight_two_collage,
    minimax_matching_number,
    weak_packing_statistic,
    zeta_min,
    zeta_star_packing,
)
from memo import MemoCache
from models import Clause, FieldPrime, PropertyReport
from regularity import reg_by_links, reg_by_subcomplexes, reg_vd_recursive, regularity_value, verify_certificate
from utils import format_set, get_logger, iter_bits

logger = get_logger(__name__)


def holds(op: str, left: Any, right: Any) -> bool:
    if op == "le":
        return left <= right
    if op == "lt":
        return left < right
    if op == "ge":
        return left >= right
    if op == "eq":
        return left == right
    if op == "in":
        return left in right
    raise ValueError(f"unknown relation {op!r}")


def describe(h: Hypergraph) -> str:
    """One-line instance description, e.g. `a b c | ab bc`."""
    edges = " ".join("".join(h.edge_labels(e)) if all(len(x) == 1 for x in h.labels) else format_set(e, h.labels)
                     for e in h.edges)
    return f"{' '.join(h.labels)} | {edges}"


def describe_complex(delta: SimplicialComplex) -> str:
    return "facets " + " ".join(format_set(f, delta.labels) for f in delta.facets)


class ReportBuilder:
    """Accumulates clauses for one PropertyReport."""

    def __init__(self, property_id: str, instance: str, p: int | FieldPrime) -> None:
        self.report = PropertyReport(property_id, instance, FieldPrime.of(p).p)

    def add(self, label: str, op: str, left: Any, right: Any, hypothesis: bool = True) -> bool:
        ok = holds(op, left, right) if hypothesis else False
        self.report.clauses.append(Clause(label, op, _plain(left), _plain(right), ok, hypothesis))
        if hypothesis and not ok:
            logger.debug("%s: %s failed on %s (%r %s %r)", self.report.property_id, label,
                         self.report.instance, left, op, right)
        return ok

    def certify(self, key: str, value: Any) -> None:
        self.report.certificates[key] = value

    def done(self) -> PropertyReport:
        return self.report


def _plain(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def _cache(cache: MemoCache | None) -> MemoCache:
    return cache if cache is not None else MemoCache("verify")


def _reg(delta: SimplicialComplex, q: int, cache: MemoCache) -> int:
    return regularity_value(delta, q, cache)


def _reg_h(h: Hypergraph, q: int, cache: MemoCache) -> int:
    return _reg(independence_complex(h), q, cache)


# -----------------------------------------------------------------------------
# Hypergraph bounds
# -----------------------------------------------------------------------------

def check_collage_bounds(h: Hypergraph, p: int | FieldPrime = 2, cache: MemoCache | None = None) -> PropertyReport:
    """Σ over an induced matching <= reg <= Σ over a 2-collage, and the uniform and graph forms."""
    if not h.edges:
        raise TooFewEdgesError("collage bounds need at least one edge")
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("collage_bounds", describe(h), q)
    reg = _reg_h(h, q, cache)
    induced = max_weight_induced_matching(h)
    weight, collage = min_weight_two_collage(h)
    size, smallest = min_two_collage(h)
    b.add("induced matching weight <= reg", "le", induced.weight(h.edges), reg)
    b.add("reg <= collage weight", "le", reg, weight)
    d = uniformity(h)
    nu_ind = len(max_induced_matching(h))
    b.add("(d-1) nu_ind <= reg", "le", (d - 1) * nu_ind if d else None, reg, hypothesis=d is not None)
    b.add("reg <= (d-1) c", "le", reg, (d - 1) * size if d else None, hypothesis=d is not None)
    b.add("min collage weight == (d-1) c", "eq", weight, (d - 1) * size if d else None, hypothesis=d is not None)
    b.add("collage size == nu_min", "eq", size, minimax_matching_number(h), hypothesis=is_graph(h))
    b.add("maximal matching is a collage", "eq", is_two_collage(h, min_maximal_matching(h)), True,
          hypothesis=is_graph(h))
    families = maximal_2separated_families(h)
    b.add("maximal 2-separated families are collages", "eq",
          sum(1 for f in families if is_two_collage(h, f)), len(families))
    b.certify("reg_RI", reg)
    b.certify("induced_matching", induced.to_dict(h.edges, h.labels))
    b.certify("collage", collage.to_dict(h.edges, h.labels))
    b.certify("min_collage", smallest.to_dict(h.edges, h.labels))
    return b.done()


def check_km_subadditivity(
    h: Hypergraph, partition: Sequence[Sequence[int]], p: int | FieldPrime = 2, cache: MemoCache | None = None
) -> PropertyReport:
    """reg(H) <= Σ reg(H_i) when the parts (edge indices) cover every edge."""
    covered = {i for part in partition for i in part}
    if any(not 0 <= i < len(h.edges) for i in covered):
        raise EdgeNotFoundError("partition names an edge index outside the hypergraph")
    if len(covered) != len(h.edges):
        raise PartitionError(f"parts cover {len(covered)} of {len(h.edges)} edges")
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("km_subadditivity", describe(h), q)
    parts = [Hypergraph.from_edges(h.labels, (h.edges[i] for i in part)) for part in partition]
    values = [_reg_h(part, q, cache) for part in parts]
    b.add("reg <= sum of part regularities", "le", _reg_h(h, q, cache), sum(values))
    b.certify("part_count", len(partition))
    b.certify("parts", [[h.edge_labels(h.edges[i]) for i in part] for part in partition])
    b.certify("part_regs", values)
    return b.done()


def check_edge_split(
    h: Hypergraph, e: int, p: int | FieldPrime = 2, cache: MemoCache | None = None
) -> PropertyReport:
    """reg I(H) <= max(reg I(H∖E), reg I(H_E) - 1) for an edge mask E."""
    if len(h.edges) < 2:
        raise TooFewEdgesError("edge split needs at least two edges")
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("edge_split", describe(h), q)
    without = delete_edge(h, e)
    fused = edge_fusion(h, e)
    reg_i = _reg_h(h, q, cache) + 1
    right = max(_reg_h(without, q, cache) + 1, _reg_h(fused, q, cache))
    b.add("reg I(H) <= max(reg I(H-E), reg I(H_E) - 1)", "le", reg_i, right)
    b.certify("edge", h.edge_labels(e))
    return b.done()


def check_single_collage(h: Hypergraph, p: int | FieldPrime = 2, cache: MemoCache | None = None) -> PropertyReport:
    """If one edge E0 is a 2-collage on its own, reg I = |E0|."""
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("single_collage", describe(h), q)
    singles = [i for i in range(len(h.edges)) if is_two_collage(h, (i,))]
    reg_i = _reg_h(h, q, cache) + 1 if h.edges else None
    for i in singles:
        b.add(f"reg I == |{format_set(h.edges[i], h.labels)}|", "eq", reg_i, h.edges[i].bit_count())
    if not singles:
        b.add("reg I == |E0|", "eq", reg_i, None, hypothesis=False)
    return b.done()


def check_union_additivity(
    h1: Hypergraph, h2: Hypergraph, p: int | FieldPrime = 2, cache: MemoCache | None = None
) -> PropertyReport:
    q, cache = FieldPrime.of(p).p, _cache(cache)
    union = disjoint_union(h1, h2)
    b = ReportBuilder("union_additivity", describe(union), q)
    b.add("reg(H1 + H2) == reg H1 + reg H2", "eq",
          _reg_h(union, q, cache), _reg_h(h1, q, cache) + _reg_h(h2, q, cache))
    return b.done()


def check_separation_example(s: int, p: int | FieldPrime = 2, cache: MemoCache | None = None) -> PropertyReport:
    """H_s: reg = s+1 with ν = ν_min = 1, so (d-1)ν_min falls below reg once s >= 2."""
    from families import generate_family

    h = generate_family("hs", {"s": s})
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("separation_example", f"H_{s}", q)
    reg = _reg_h(h, q, cache)
    size, _ = min_two_collage(h)
    nu_min = minimax_matching_number(h)
    b.add("reg == s+1", "eq", reg, s + 1)
    b.add("nu == 1", "eq", matching_number(h), 1)
    b.add("nu_min == 1", "eq", nu_min, 1)
    b.add("min collage == s", "eq", size, s)
    b.add("reg <= 2s", "le", reg, 2 * s)
    b.add("2 nu_min < reg", "lt", 2 * nu_min, reg, hypothesis=s >= 2)
    return b.done()


# -----------------------------------------------------------------------------
# Complex-level identities
# -----------------------------------------------------------------------------

def check_method_agreement(delta: SimplicialComplex, p: int | FieldPrime = 2) -> PropertyReport:
    q = FieldPrime.of(p).p
    b = ReportBuilder("method_agreement", describe_complex(delta), q)
    by_subsets = reg_by_subcomplexes(delta, q)
    by_links = reg_by_links(delta, q)
    b.add("subsets == links", "eq", by_subsets.value, by_links.value)
    for name, report in (("subsets", by_subsets), ("links", by_links)):
        try:
            verify_certificate(delta, report.certificate, q)
            ok = True
        except CertificateError:
            ok = False
        b.add(f"{name} certificate verifies", "eq", ok, True)
        b.certify(name, report.certificate.to_dict(delta.labels))
    return b.done()


def _graph_of(nonfaces: Hypergraph) -> Hypergraph | None:
    return nonfaces if nonfaces.edges and is_graph(nonfaces) else None


def check_dichotomy(
    delta: SimplicialComplex,
    p: int | FieldPrime = 2,
    cache: MemoCache | None = None,
    locality_max_face: int | None = None,
) -> PropertyReport:
    """Per vertex: reg Δ ∈ {reg link v + 1, reg del v}; plus the link sandwich and degree refinements."""
    if locality_max_face is None:
        from config import get

        locality_max_face = int(get("verify.locality_max_face", 2))
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("dichotomy", describe_complex(delta), q)
    reg = _reg(delta, q, cache)
    link_regs: dict[int, int] = {}
    del_regs: dict[int, int] = {}
    for v in delta.vertices():
        link_regs[v] = _reg(link(delta, 1 << v), q, cache)
        del_regs[v] = _reg(deletion(delta, v), q, cache)
        name = delta.labels[v]
        b.add(f"reg in {{reg link {name} + 1, reg del {name}}}", "in", reg, sorted({link_regs[v] + 1, del_regs[v]}))
    has_vertices = bool(link_regs)
    b.add("reg <= max(reg link v + 1, reg del v)", "le", reg,
          max((max(link_regs[v] + 1, del_regs[v]) for v in link_regs), default=None),
          hypothesis=has_vertices)
    b.add("max reg del v <= reg", "le", max(del_regs.values(), default=None), reg, hypothesis=has_vertices)
    top_link = max(link_regs.values(), default=None)
    b.add("max reg link v <= reg", "le", top_link, reg, hypothesis=has_vertices)
    b.add("reg <= max reg link v + 1", "le", reg, top_link + 1 if has_vertices else None, hypothesis=has_vertices)

    nonfaces = minimal_nonfaces(delta)
    non_cone = [v for v in link_regs if any(e >> v & 1 for e in nonfaces.edges)]
    b.add("reg <= reg link v + 1 for some non-cone v", "le", reg,
          max((link_regs[v] + 1 for v in non_cone), default=None), hypothesis=bool(non_cone))

    graph = _graph_of(nonfaces)
    heavy: list[int] = []
    if graph is not None:
        degrees = vertex_degrees(graph)
        isolated_edge = any(all(degrees[graph.labels[i]] == 1 for i in iter_bits(e)) for e in graph.edges)
        if not isolated_edge:
            heavy = [v for v in link_regs if degrees[delta.labels[v]] > 1]
    b.add("reg <= reg link v + 1 for some v of degree > 1", "le", reg,
          max((link_regs[v] + 1 for v in heavy), default=None), hypothesis=bool(heavy))

    b.add("reg <= weak packing statistic", "le", reg, weak_packing_statistic(delta))

    local = [s for s in faces(delta) if 1 <= s.bit_count() <= locality_max_face]
    b.add("reg link sigma <= reg", "le",
          max((_reg(link(delta, s), q, cache) for s in local), default=None), reg, hypothesis=bool(local))
    b.certify("reg_RI", reg)
    return b.done()


def check_vd_formula(
    delta: SimplicialComplex,
    p: int | FieldPrime = 2,
    cache: MemoCache | None = None,
    locality_max_face: int | None = None,
) -> PropertyReport:
    """Shedding-vertex identities: reg at sequentially CM deletions, lifting,
    shedding locality, and for VD complexes the recursion and Betti splitting."""
    if locality_max_face is None:
        from config import get

        locality_max_face = int(get("verify.locality_max_face", 2))
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("vd_formula", describe_complex(delta), q)
    reg = _reg(delta, q, cache)
    betti = reduced_betti(delta, q)
    shedders = [v for v in delta.vertices() if is_shedding_vertex(delta, v)]

    for v in shedders:
        name = delta.labels[v]
        lk, dl = link(delta, 1 << v), deletion(delta, v)
        scm = is_sequentially_cm(dl, q)
        b.add(f"reg == max(reg del {name}, reg link {name} + 1)", "eq", reg,
              max(_reg(dl, q, cache), _reg(lk, q, cache) + 1), hypothesis=scm)
        if scm:
            for n in reduced_betti(lk, q).nonzero_degrees():
                b.add(f"H_{n + 1}(Δ) != 0 lifted from link {name}", "ge", betti[n + 1], 1)

    broken, pairs = 0, 0
    for v in shedders:
        for s in faces(delta):
            if not 1 <= s.bit_count() <= locality_max_face or s >> v & 1:
                continue
            lk = link(delta, s)
            if not lk.vertex_mask >> v & 1:
                continue
            pairs += 1
            if not is_shedding_vertex(lk, v):
                broken += 1
    b.add("shedding vertices shed in links", "eq", broken, 0, hypothesis=pairs > 0)

    ok, cert = is_vertex_decomposable(delta, cache)
    b.add("vd implies sequentially CM", "eq", is_sequentially_cm(delta, q) if ok else None, True, hypothesis=ok)
    if ok:
        b.add("vd recursion == subsets", "eq",
              reg_vd_recursive(delta, q, cache=cache).value, reg_by_subcomplexes(delta, q).value)
        for step in cert.steps():
            gamma, v = step.complex, step.vertex
            assert v is not None
            whole = reduced_betti(gamma, q)
            dl = reduced_betti(deletion(gamma, v), q)
            lk = reduced_betti(link(gamma, 1 << v), q)
            degrees = range(-1, gamma.dim + 1)
            b.add(f"betti splitting at {gamma.labels[v]}", "eq",
                  [whole[n + 1] for n in degrees], [dl[n + 1] + lk[n] for n in degrees])
        b.certify("shedding_order", [delta.labels[v] for v in cert.order()])
    return b.done()


def check_zeta_bound(g: Hypergraph, p: int | FieldPrime = 2, cache: MemoCache | None = None) -> PropertyReport:
    """reg <= ζ(G) <= ν(G) and reg <= α(G); ζ_min is reported only."""
    alpha = independence_number(g)
    q, cache = FieldPrime.of(p).p, _cache(cache)
    b = ReportBuilder("zeta_bound", describe(g), q)
    reg = _reg_h(g, q, cache)
    zeta, packing = zeta_star_packing(g)
    nu = matching_number(g)
    b.add("reg <= zeta", "le", reg, zeta)
    b.add("zeta <= nu", "le", zeta, nu)
    b.add("reg <= alpha", "le", reg, alpha)
    b.certify("packing", packing.to_dict(g.labels))
    b.certify("zeta_min", zeta_min(g)[0])
    return b.done()

