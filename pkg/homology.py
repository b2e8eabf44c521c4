"""
Reduced simplicial homology over GF(p) from boundary-matrix ranks.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from complex import SimplicialComplex, faces
from errors import VoidComplexError
from models import BettiVector, FieldPrime
from utils import get_logger, iter_bits

logger = get_logger(__name__)


def _char(p: int | FieldPrime) -> int:
    return FieldPrime.of(p).p


def boundary_matrix(delta: SimplicialComplex, i: int, p: int | FieldPrime = 2) -> np.ndarray:
    """∂_i over GF(p): rows are the (i-1)-faces, columns the i-faces, both canonical.

    ∂_0 is the augmentation onto the one-dimensional (-1)-chain group spanned
    by ∅. Degrees with no faces on either side give an empty matrix.
    """
    if delta.is_void:
        raise VoidComplexError("boundary matrix of the void complex")
    q = _char(p)
    top = delta.dim
    if i < -1 or i > top + 1:
        return np.zeros((0, 0), dtype=np.int64)
    cols = faces(delta, i) if i <= top else ()
    rows = faces(delta, i - 1) if i >= 0 else ()
    row_index = {f: r for r, f in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, sigma in enumerate(cols):
        for j, v in enumerate(iter_bits(sigma)):
            m[row_index[sigma & ~(1 << v)], c] = 1 if j % 2 == 0 else q - 1
    return m % q


def rank_mod_p(matrix: np.ndarray | list[list[int]], p: int | FieldPrime = 2) -> int:
    """Row-reduce a copy over GF(p) and count pivots."""
    q = _char(p)
    a = np.array(matrix, dtype=np.int64) % q
    if a.ndim != 2 or a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, q) % q
        rest = a[rank + 1:]
        hit = rest[:, c] != 0
        if hit.any():
            rest[hit] = (rest[hit] - np.outer(rest[hit, c], a[rank])) % q
        rank += 1
    return rank


@lru_cache(maxsize=65536)
def _betti(delta: SimplicialComplex, q: int) -> BettiVector:
    top = delta.dim
    counts = [1] + [len(faces(delta, i)) for i in range(top + 1)]
    ranks = {i: rank_mod_p(boundary_matrix(delta, i, q), q) for i in range(0, top + 2)}
    ranks[-1] = 0
    dims = {}
    for i in range(-1, top + 1):
        b = counts[i + 1] - ranks[i] - ranks[i + 1]
        if b:
            dims[i] = b
    return BettiVector(dims, top, q)


def reduced_betti(delta: SimplicialComplex, p: int | FieldPrime = 2) -> BettiVector:
    """dim H̃_i(Δ; GF(p)) for i = -1..dim Δ; {∅} has H̃_{-1} = 1."""
    if delta.is_void:
        raise VoidComplexError("reduced homology of the void complex")
    return _betti(delta, _char(p))


def has_homology(delta: SimplicialComplex, degree: int, p: int | FieldPrime = 2) -> bool:
    return reduced_betti(delta, p)[degree] != 0


def clear_cache() -> None:
    info = _betti.cache_info()
    logger.debug("betti cache: %d entries, %d hits, %d misses", info.currsize, info.hits, info.misses)
    _betti.cache_clear()
