"""
Vertex decomposability, shedding orders, and the Cohen–Macaulay and
sequentially Cohen–Macaulay tests.

{∅} counts as a simplex, so it is vertex-decomposable, CM and sequentially CM.
"""
from __future__ import annotations

from complex import SimplicialComplex, deletion, faces, is_simplex, link, pure_skeleton
from errors import NotAFaceError, NotVertexDecomposableError, VoidComplexError
from homology import reduced_betti
from memo import MemoCache
from models import FieldPrime, SheddingCertificate
from utils import get_logger

logger = get_logger(__name__)


def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.is_void:
        raise VoidComplexError("operation undefined on the void complex")


def is_shedding_vertex(delta: SimplicialComplex, v: int) -> bool:
    """Every facet of del_Δ(v) is a facet of Δ."""
    _require_nonvoid(delta)
    if not 0 <= v < delta.universe_size or not delta.vertex_mask >> v & 1:
        raise NotAFaceError(f"vertex index {v} is not a vertex of the complex")
    own = set(delta.facets)
    return all(f in own for f in deletion(delta, v).facets)


def _decompose(delta: SimplicialComplex, cache: MemoCache) -> SheddingCertificate:
    def compute() -> SheddingCertificate:
        if is_simplex(delta):
            return SheddingCertificate(delta)
        failure: SimplicialComplex | None = None
        for v in delta.vertices():
            if not is_shedding_vertex(delta, v):
                continue
            lk = _decompose(link(delta, 1 << v), cache)
            if not lk.decomposable:
                failure = failure or lk.witness
                continue
            dl = _decompose(deletion(delta, v), cache)
            if not dl.decomposable:
                failure = failure or dl.witness
                continue
            logger.debug("vertex %s sheds for %s", delta.labels[v], delta.facets)
            return SheddingCertificate(delta, v, lk, dl)
        return SheddingCertificate(delta, witness=failure if failure is not None else delta)

    return cache.get_or_compute(("vd", delta.labels, delta.key), compute)


def is_vertex_decomposable(
    delta: SimplicialComplex, cache: MemoCache | None = None
) -> tuple[bool, SheddingCertificate]:
    """Exact recursive decision; vertices are tried in ascending index order.

    The certificate is a decomposition tree on success, otherwise a node whose
    `witness` is a descendant complex in which no vertex sheds.
    """
    _require_nonvoid(delta)
    cert = _decompose(delta, cache if cache is not None else MemoCache("vd"))
    return cert.decomposable, cert


def shedding_order(delta: SimplicialComplex, cache: MemoCache | None = None) -> list[int]:
    ok, cert = is_vertex_decomposable(delta, cache)
    if not ok:
        raise NotVertexDecomposableError("complex is not vertex-decomposable", cert)
    return cert.order()


def is_cohen_macaulay(delta: SimplicialComplex, p: int | FieldPrime = 2) -> bool:
    """Reisner: every link (∅ included) has homology only in its top degree."""
    _require_nonvoid(delta)
    for sigma in faces(delta):
        lk = link(delta, sigma)
        top = lk.dim
        if any(i < top for i in reduced_betti(lk, p).nonzero_degrees()):
            return False
    return True


def is_sequentially_cm(delta: SimplicialComplex, p: int | FieldPrime = 2) -> bool:
    """Duval: every pure n-skeleton, 0 <= n <= dim, is Cohen–Macaulay."""
    _require_nonvoid(delta)
    return all(is_cohen_macaulay(pure_skeleton(delta, n), p) for n in range(delta.dim + 1))
