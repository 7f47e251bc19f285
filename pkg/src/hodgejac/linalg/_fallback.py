"""Pure numpy versions of the compiled kernels (same contracts)."""
from __future__ import annotations

import numpy as np


def rref_block(Y: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Reduce ``Y`` in place to reduced row echelon form modulo ``p``.

    ``Y`` is a C-contiguous float64 array of residues in ``[0, p)``.
    Returns the rank and the pivot column of each leading row.
    """
    b, n = Y.shape
    pivots: list[int] = []
    r = c = 0
    while r < b and c < n:
        nz = np.flatnonzero(Y[r:, c:].any(axis=0))
        if nz.size == 0:
            break
        c += int(nz[0])
        i = r + int(np.flatnonzero(Y[r:, c])[0])
        if i != r:
            Y[[r, i]] = Y[[i, r]]
        inv = pow(int(Y[r, c]), p - 2, p)
        Y[r, c:] = np.mod(Y[r, c:] * inv, p)
        col = Y[:, c].copy()
        col[r] = 0.0
        rows = np.flatnonzero(col)
        if rows.size:
            Y[rows, c:] = np.mod(Y[rows, c:] - np.outer(col[rows], Y[r, c:]), p)
        pivots.append(c)
        r += 1
        c += 1
    return r, pivots
