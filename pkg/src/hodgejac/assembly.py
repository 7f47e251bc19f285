"""Matrices spanned by products ``g * m`` inside a graded piece.

A :class:`RowSystem` stores, for every product of a generator with a basis
monomial of the source degree, its integer coefficients on the *ambient*
monomials of the target degree.  Normal forms (needed on Grassmannians) are
applied lazily: exactly for small systems, modulo a prime block by block for
the large ones.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

from .ambient import GradedSpace
from .errors import PreconditionError
from .linalg.exact import bareiss_rank, integer_rows
from .linalg.modular import DEFAULT_PRIME, SECOND_PRIME, rank_mod_p
from .monomials import IntTerms
from .poly import MultiPoly

log = logging.getLogger(__name__)

#: systems with rows * cols * min(rows, cols) below this use exact elimination
EXACT_BUDGET = 3_000_000


@dataclass
class RowSystem:
    """Integer rows over the ambient monomials of ``target``."""

    target: GradedSpace
    matrix: sp.csr_matrix          # int64 coefficients, ambient columns
    labels: list = field(default_factory=list, repr=False)

    @property
    def nrows(self) -> int:
        return self.matrix.shape[0]

    @property
    def ncols(self) -> int:
        """Dimension of the target piece (standard basis size)."""
        return self.target.dim

    def stacked(self, other: "RowSystem") -> "RowSystem":
        if other.target is not self.target:
            raise ValueError("row systems live in different graded pieces")
        return RowSystem(self.target, sp.vstack([self.matrix, other.matrix]).tocsr(),
                         self.labels + other.labels)

    def dedupe(self) -> "RowSystem":
        """Drop zero rows and exact duplicates (first occurrence kept)."""
        M = self.matrix
        M.sum_duplicates()
        M.sort_indices()
        seen = {}
        keep = []
        ind, dat, ptr = M.indices, M.data, M.indptr
        for r in range(M.shape[0]):
            a, b = ptr[r], ptr[r + 1]
            if a == b:
                continue
            key = (ind[a:b].tobytes(), dat[a:b].tobytes())
            if key not in seen:
                seen[key] = r
                keep.append(r)
        labels = [self.labels[r] for r in keep] if self.labels else []
        return RowSystem(self.target, M[keep], labels)

    # exact ------------------------------------------------------------------
    def coordinate_rows(self) -> list[dict[int, Fraction]]:
        """Exact rows in the standard basis of the target."""
        M = self.matrix
        out = []
        nf = self.target.nf
        for r in range(M.shape[0]):
            a, b = M.indptr[r], M.indptr[r + 1]
            row: dict[int, Fraction] = {}
            for c, v in zip(M.indices[a:b], M.data[a:b]):
                items = ((int(c), 1),) if nf is None else nf[int(c)].items()
                for j, w in items:
                    nv = row.get(j, 0) + int(v) * w
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
            out.append(row)
        return out

    def exact_rank(self) -> int:
        n = self.ncols
        dense = []
        for row in self.coordinate_rows():
            if row:
                line = [0] * n
                for j, v in row.items():
                    line[j] = v
                dense.append(line)
        return bareiss_rank(integer_rows(dense))

    # modular ----------------------------------------------------------------
    def modular_matrix(self, p: int):
        M = self.matrix.copy()
        M.data = np.mod(M.data, p)
        if self.target.is_identity:
            return M
        return _NormalFormProduct(M, self.target.nf_matrix_mod(p), p)

    def modular_rank(self, p: int = DEFAULT_PRIME) -> int:
        return rank_mod_p(self.modular_matrix(p), p)


class _NormalFormProduct:
    """Lazy ``(C @ N) mod p`` served in row blocks to the rank engine."""

    def __init__(self, C: sp.csr_matrix, N: sp.csr_matrix, p: int):
        self.C, self.N, self.p = C, N, p
        self.shape = (C.shape[0], N.shape[1])

    def row_block(self, start: int, stop: int) -> np.ndarray:
        B = (self.C[start:stop] @ self.N).toarray()
        return np.mod(B, self.p)


def product_rows(gens: Sequence[MultiPoly], source: GradedSpace | None,
                 target: GradedSpace) -> RowSystem:
    """Rows ``g * m`` for every generator ``g`` and source basis monomial ``m``.

    ``source=None`` means the source is the constants (a single unit
    multiplier).  Generators are scaled to integer coefficients, which does
    not change the span.
    """
    nv = target.nvars
    if source is None:
        shifts = np.zeros((1, nv), dtype=np.int64)
    else:
        shifts = source.basis_index.monos
    rows, cols, vals, labels = [], [], [], []
    r0 = 0
    nshift = shifts.shape[0]
    for gi, g in enumerate(gens):
        it = IntTerms(g)
        if not len(it):
            continue
        if any(abs(c) >= 1 << 62 for c in it.coeffs):
            raise PreconditionError("coefficients too large for the matrix assembly")
        pos = target.ambient_index.lookup(shifts[:, None, :] + it.exps[None, :, :])
        if (pos < 0).any():
            raise PreconditionError("a product left the target graded piece")
        T = len(it)
        rows.append(np.repeat(np.arange(r0, r0 + nshift, dtype=np.int64), T))
        cols.append(pos.ravel())
        vals.append(np.tile(np.array(it.coeffs, dtype=np.int64), nshift))
        labels.extend((gi, s) for s in range(nshift))
        r0 += nshift
    ncols = len(target.ambient)
    if r0 == 0:
        return RowSystem(target, sp.csr_matrix((0, ncols), dtype=np.int64), [])
    M = sp.csr_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                      shape=(r0, ncols), dtype=np.int64)
    return RowSystem(target, M, labels)


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str            # "exact" | "modular"
    certified: bool        # rank proven equal to the rational rank
    primes: tuple[int, ...] = ()


def system_rank(system: RowSystem, method: str = "auto") -> RankResult:
    """Rank of a row system over the rationals.

    ``exact`` uses fraction-free elimination.  ``modular`` computes the rank
    modulo a large prime; that is a lower bound for the rational rank, and it
    is certified exact when it is full.  A deficient modular rank is repeated
    with a second prime and the larger value kept.
    """
    m, n = system.nrows, system.ncols
    if m == 0 or n == 0:
        return RankResult(0, "exact", True)
    if method == "auto":
        method = "exact" if m * n * min(m, n) <= EXACT_BUDGET else "modular"
    if method == "exact":
        return RankResult(system.exact_rank(), "exact", True)
    if method != "modular":
        raise ValueError(f"unknown rank method {method!r}")
    r1 = system.modular_rank(DEFAULT_PRIME)
    if r1 == min(m, n):
        return RankResult(r1, "modular", True, (DEFAULT_PRIME,))
    r2 = system.modular_rank(SECOND_PRIME)
    r = max(r1, r2)
    if r1 != r2:
        log.warning("ranks modulo two primes differ (%d vs %d)", r1, r2)
    return RankResult(r, "modular", r == min(m, n), (DEFAULT_PRIME, SECOND_PRIME))
