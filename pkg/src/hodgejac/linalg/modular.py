"""Rank of large sparse integer matrices modulo a word-size prime.

The rank over ``F_p`` never exceeds the rank over ``Q`` for an integer matrix
(reduction mod ``p`` can only kill minors), so a modular rank is a certified
lower bound.  It certifies the rational rank outright whenever it reaches
``min(rows, cols)``.  Callers that need certainty in the rank-deficient case
repeat the computation with a second prime or fall back to
:mod:`hodgejac.linalg.exact`.

Layout of the engine
--------------------
Rows are consumed in chunks.  Each chunk is reduced against an already
merged reduced-echelon basis ``E`` with one dense GEMM, then against a short
list of pending echelon blocks, and finally put in reduced echelon form by
the block kernel.  Pending blocks are merged into ``E`` in batches, which
keeps the number of full passes over ``E`` small.  Residues are stored
centred in ``(-p/2, p/2)`` as float64; with ``p < 2**21`` every partial sum
of a GEMM with inner dimension at most ``INNER`` stays below ``2**53``, so
BLAS arithmetic is exact.
"""
from __future__ import annotations

import logging
import os
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

from . import _fallback

log = logging.getLogger(__name__)

#: Largest prime below 2**21; the default modulus.
DEFAULT_PRIME = 2097143
#: Independent second modulus used to confirm rank deficiencies.
SECOND_PRIME = 2097133

INNER = 8000

if os.environ.get("HODGEJAC_FORCE_FALLBACK"):
    _rref_block = _fallback.rref_block
    BACKEND = "numpy"
else:
    try:
        from ._kernels import rref_block as _rref_block

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _rref_block = _fallback.rref_block
        BACKEND = "numpy"


def fraction_mod(q: Fraction | int, p: int) -> int:
    """Image of a rational number in ``F_p``.

    Raises
    ------
    ZeroDivisionError
        If ``p`` divides the denominator.
    """
    q = Fraction(q)
    den = q.denominator % p
    if den == 0:
        raise ZeroDivisionError(f"denominator of {q} vanishes modulo {p}")
    return (q.numerator % p) * pow(den, p - 2, p) % p


def _center(x: np.ndarray, p: int) -> np.ndarray:
    invp = 1.0 / p
    x -= p * np.rint(x * invp)
    x -= p * np.rint(x * invp)
    return x


def _sub_product(y: np.ndarray, a: np.ndarray, b: np.ndarray, p: int) -> None:
    """``y -= a @ b`` for centred ``a``, ``b``; splits long inner dimensions."""
    k = a.shape[1]
    if k <= INNER:
        y -= a @ b
        return
    for s in range(0, k, INNER):
        y -= a[:, s:s + INNER] @ b[s:s + INNER]
        _center(y, p)


def _to_unit_range(x: np.ndarray, p: int) -> np.ndarray:
    x = np.mod(x, p)
    return np.ascontiguousarray(x)


class _Engine:
    def __init__(self, ncols: int, p: int, merge: int):
        self.n = ncols
        self.p = p
        self.merge_at = merge
        self.E = np.zeros((0, ncols))
        self.pivE = np.zeros(0, dtype=np.intp)
        self.pending: list[tuple[np.ndarray, np.ndarray]] = []
        self.npending = 0

    @property
    def rank(self) -> int:
        return self.E.shape[0] + self.npending

    def push(self, Y: np.ndarray) -> None:
        p = self.p
        _center(Y, p)
        if self.E.shape[0]:
            c = np.ascontiguousarray(Y[:, self.pivE])
            _sub_product(Y, c, self.E, p)
            _center(Y, p)
        for pj, Bj in self.pending:
            c = _center(Y[:, pj].copy(), p)
            Y -= c @ Bj
        Y = _to_unit_range(Y, p)
        k, piv = _rref_block(Y, p)
        if k:
            block = _center(Y[:k].copy(), p)
            self.pending.append((np.asarray(piv, dtype=np.intp), block))
            self.npending += k
        if self.npending >= self.merge_at:
            self.flush()

    def flush(self) -> None:
        if not self.pending:
            return
        p = self.p
        blocks = self.pending
        for k in range(len(blocks) - 1, 0, -1):
            pk, Bk = blocks[k]
            for j in range(k):
                Bj = blocks[j][1]
                c = _center(Bj[:, pk].copy(), p)
                Bj -= c @ Bk
                _center(Bj, p)
        F = np.vstack([b for _, b in blocks])
        pf = np.concatenate([q for q, _ in blocks])
        if self.E.shape[0]:
            c = _center(self.E[:, pf].copy(), p)
            _sub_product(self.E, c, F, p)
            _center(self.E, p)
        self.E = np.vstack([self.E, F])
        self.pivE = np.concatenate([self.pivE, pf])
        self.pending = []
        self.npending = 0


def rank_mod_p(A, p: int = DEFAULT_PRIME, *, chunk: int = 128,
               merge: int = 512) -> int:
    """Rank of an integer matrix modulo the prime ``p``.

    Parameters
    ----------
    A : scipy.sparse matrix, ndarray or lazy block provider
        Integer entries (any sign); they are reduced modulo ``p`` here.  An
        object with ``shape`` and ``row_block(start, stop)`` returning a
        dense integer array is consumed block by block.
    p : int
        Prime below ``2**21``.
    chunk, merge : int
        Rows per kernel call, and pending pivots that trigger a merge.

    Returns
    -------
    int
    """
    if p >= 1 << 21:
        raise ValueError("modulus must be below 2**21 for exact float64 GEMM")
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    lazy = hasattr(A, "row_block")
    sparse = not lazy and sp.issparse(A)
    if sparse:
        A = sp.csr_matrix(A)
    elif not lazy:
        A = np.asarray(A)
    eng = _Engine(n, p, merge)
    for s in range(0, m, chunk):
        if lazy:
            block = A.row_block(s, min(s + chunk, m))
        else:
            block = A[s:s + chunk]
            block = block.toarray() if sparse else np.array(block)
        Y = np.mod(block, p).astype(np.float64)
        eng.push(Y)
        if eng.rank >= n:
            break
    eng.flush()
    log.debug("rank mod %d of %dx%d matrix: %d (%s kernel)", p, m, n,
              eng.rank, BACKEND)
    return eng.rank


def rref_mod_p(A: np.ndarray, p: int = DEFAULT_PRIME) -> tuple[np.ndarray, list[int]]:
    """Dense reduced row echelon form modulo ``p`` (small matrices).

    Returns the nonzero rows (residues in ``[0, p)``) and their pivots.
    """
    Y = np.ascontiguousarray(np.mod(np.asarray(A), p).astype(np.float64))
    k, piv = _rref_block(Y, p)
    return Y[:k].astype(np.int64), list(piv)
