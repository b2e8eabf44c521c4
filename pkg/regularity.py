"""
Regularity of R/I_Δ by three engines: induced subcomplexes (Hochster),
links, and the vertex-decomposable recursion. Every report carries a
certificate that is re-checked against reduced homology before it is
returned.
"""
from __future__ import annotations

from collections.abc import Sequence

from complex import SimplicialComplex, deletion, faces, independence_complex, induced_subcomplex, is_simplex, link
from decomp import is_shedding_vertex, is_vertex_decomposable
from errors import CertificateError, InvalidSheddingOrderError, NotVertexDecomposableError, VoidComplexError
from homology import reduced_betti
from hypergraph import Hypergraph
from memo import MemoCache
from models import Certificate, CertificateKind, FieldPrime, Method, RegularityReport, SheddingCertificate
from utils import format_set, full_mask, get_logger, submasks_by_size

logger = get_logger(__name__)


def _char(p: int | FieldPrime) -> int:
    return FieldPrime.of(p).p


def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.is_void:
        raise VoidComplexError("regularity of the void complex is undefined")


def _top_degree(delta: SimplicialComplex, q: int) -> int:
    """Largest d with H̃_{d-1}(delta) != 0, or -1 when delta is acyclic."""
    degrees = reduced_betti(delta, q).nonzero_degrees()
    return degrees[-1] + 1 if degrees else -1


def _is_zero_ideal(delta: SimplicialComplex) -> bool:
    return is_simplex(delta) and delta.facets[0] == full_mask(delta.universe_size)


def _witness_complex(delta: SimplicialComplex, cert: Certificate) -> SimplicialComplex:
    if cert.kind is CertificateKind.SUBSET:
        return induced_subcomplex(delta, cert.vertices)
    return link(delta, cert.vertices)


def verify_certificate(delta: SimplicialComplex, cert: Certificate, p: int | FieldPrime = 2) -> None:
    """Raise CertificateError unless H̃_{d-1} of the witnessing complex is nonzero."""
    if cert.degree < 0 or reduced_betti(_witness_complex(delta, cert), p)[cert.degree - 1] == 0:
        raise CertificateError(
            f"{cert.kind.value} certificate {format_set(cert.vertices, delta.labels)} "
            f"has no homology in degree {cert.degree - 1}"
        )


def _report(
    delta: SimplicialComplex,
    value: int,
    cert: Certificate,
    method: Method,
    q: int,
    capped: bool = False,
    check: bool | None = None,
) -> RegularityReport:
    if cert.degree != value:
        raise CertificateError(f"certificate degree {cert.degree} differs from value {value}")
    if check is None:
        from config import get

        check = bool(get("regularity.verify_certificates", True))
    if check:
        verify_certificate(delta, cert, q)
        logger.debug("certificate %s verified (degree %d)", format_set(cert.vertices, delta.labels), value)
    return RegularityReport(
        value=value,
        certificate=cert,
        method=method,
        field_char=q,
        labels=delta.labels,
        zero_ideal=_is_zero_ideal(delta),
        capped=capped,
    )


# -----------------------------------------------------------------------------
# Scans
# -----------------------------------------------------------------------------

def _scan_subsets(delta: SimplicialComplex, q: int, max_degree: int | None) -> tuple[int, int, bool]:
    ceiling = delta.dim + 1
    best, witness = 0, 0  # Δ[∅] = {∅} has H̃_{-1} != 0
    for s in submasks_by_size(delta.vertex_mask):
        if best >= ceiling:
            break
        if max_degree is not None and best >= max_degree:
            return best, witness, True
        if s.bit_count() <= best:
            continue
        sub = induced_subcomplex(delta, s)
        if sub.dim + 1 <= best:
            continue
        d = _top_degree(sub, q)
        if d > best:
            best, witness = d, s
    return best, witness, False


def _scan_links(delta: SimplicialComplex, q: int, max_degree: int | None) -> tuple[int, int, bool]:
    ceiling = delta.dim + 1
    best, witness = -1, 0
    for sigma in faces(delta):
        if best >= 0 and ceiling - sigma.bit_count() <= best:
            break
        if max_degree is not None and best >= max_degree:
            return best, witness, True
        lk = link(delta, sigma)
        if lk.dim + 1 <= best:
            continue
        d = _top_degree(lk, q)
        if d > best:
            best, witness = d, sigma
    return best, witness, False


def _first_face_witness(delta: SimplicialComplex, d: int, q: int) -> int:
    for sigma in faces(delta):
        lk = link(delta, sigma)
        if lk.dim >= d - 1 and reduced_betti(lk, q)[d - 1]:
            return sigma
    raise CertificateError(f"no face link has homology in degree {d - 1}")


# -----------------------------------------------------------------------------
# Engines
# -----------------------------------------------------------------------------

def reg_by_subcomplexes(
    delta: SimplicialComplex, p: int | FieldPrime = 2, max_degree: int | None = None
) -> RegularityReport:
    """max d with H̃_{d-1}(Δ[S]) != 0 over vertex subsets S, least S in canonical order."""
    _require_nonvoid(delta)
    q = _char(p)
    value, witness, capped = _scan_subsets(delta, q, max_degree)
    cert = Certificate(CertificateKind.SUBSET, witness, value)
    return _report(delta, value, cert, Method.SUBSETS, q, capped)


def reg_by_links(
    delta: SimplicialComplex, p: int | FieldPrime = 2, max_degree: int | None = None
) -> RegularityReport:
    """max d with H̃_{d-1}(link σ) != 0 over faces σ."""
    _require_nonvoid(delta)
    q = _char(p)
    value, witness, capped = _scan_links(delta, q, max_degree)
    cert = Certificate(CertificateKind.FACE, witness, value)
    return _report(delta, value, cert, Method.LINKS, q, capped)


def regularity_value(delta: SimplicialComplex, p: int | FieldPrime = 2, cache: MemoCache | None = None) -> int:
    """Bare reg(R/I_Δ), memoized when a cache is given."""
    _require_nonvoid(delta)
    q = _char(p)
    if cache is None:
        return _scan_links(delta, q, None)[0]
    return cache.get_or_compute(("reg", delta.key, q), lambda: _scan_links(delta, q, None)[0])


def _vd_value(cert: SheddingCertificate, cache: MemoCache) -> int:
    def compute() -> int:
        if cert.vertex is None:
            return 0
        assert cert.link_branch is not None and cert.deletion_branch is not None
        return max(_vd_value(cert.link_branch, cache) + 1, _vd_value(cert.deletion_branch, cache))

    return cache.get_or_compute(("vd-reg", cert.complex.key), compute)


def _value_along_order(delta: SimplicialComplex, order: Sequence[int], cache: MemoCache) -> int:
    spine: list[tuple[SimplicialComplex, int]] = []
    current = delta
    for v in order:
        if not 0 <= v < current.universe_size or not current.vertex_mask >> v & 1:
            raise InvalidSheddingOrderError(f"vertex index {v} is not a vertex of the current complex", v)
        name = current.labels[v]
        if not is_shedding_vertex(current, v):
            raise InvalidSheddingOrderError(f"{name} is not a shedding vertex", v)
        ok, lk_cert = is_vertex_decomposable(link(current, 1 << v), cache)
        if not ok:
            raise InvalidSheddingOrderError(f"link of {name} is not vertex-decomposable", v)
        spine.append((current, _vd_value(lk_cert, cache)))
        current = deletion(current, v)
    if not is_simplex(current):
        last = order[-1] if order else None
        after = f"after {current.labels[last]}" if last is not None else "with an empty order"
        facets = " ".join(format_set(f, current.labels) for f in current.facets)
        raise InvalidSheddingOrderError(f"shedding order stops {after} at non-simplex {facets}", last, current)
    value = 0
    for _, link_value in reversed(spine):
        value = max(link_value + 1, value)
    return value


def reg_vd_recursive(
    delta: SimplicialComplex,
    p: int | FieldPrime = 2,
    order: Sequence[int] | None = None,
    cache: MemoCache | None = None,
) -> RegularityReport:
    """reg Δ = max(reg link v + 1, reg del v) down a shedding order, simplices giving 0.

    Without an order, decomposability is decided first; the cache is shared
    with that search.
    """
    _require_nonvoid(delta)
    q = _char(p)
    cache = cache if cache is not None else MemoCache("vd")
    if order is None:
        ok, cert = is_vertex_decomposable(delta, cache)
        if not ok:
            raise NotVertexDecomposableError("complex is not vertex-decomposable", cert)
        value = _vd_value(cert, cache)
    else:
        value = _value_along_order(delta, order, cache)
    cache.log_stats()
    witness = _first_face_witness(delta, value, q)
    return _report(delta, value, Certificate(CertificateKind.FACE, witness, value), Method.VD, q)


def compute_regularity(
    delta: SimplicialComplex,
    p: int | FieldPrime = 2,
    method: Method | str = Method.AUTO,
    max_degree: int | None = None,
    cache: MemoCache | None = None,
) -> RegularityReport:
    method = Method(method)
    if method is Method.SUBSETS:
        return reg_by_subcomplexes(delta, p, max_degree)
    if method is Method.VD:
        return reg_vd_recursive(delta, p, cache=cache)
    return reg_by_links(delta, p, max_degree)


def reg_edge_ideal(
    h: Hypergraph,
    p: int | FieldPrime = 2,
    method: Method | str = Method.AUTO,
    max_degree: int | None = None,
) -> RegularityReport:
    """reg(R/I(H)) via Δ(H); `auto` uses the link engine."""
    return compute_regularity(independence_complex(h), p, method, max_degree)
