"""Exact rank computations over the rationals.

Two tools live here: fraction-free Bareiss elimination for dense integer
matrices, and an incremental sparse echelon form over ``Fraction`` that can
record how every reduced row was obtained from the inserted ones.
"""
from __future__ import annotations

import heapq
from collections.abc import Hashable, Iterable, Mapping, Sequence
from fractions import Fraction
from math import lcm


def integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    """Scale every row of a rational matrix to integers (row by row)."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(rows: Iterable[Sequence]) -> int:
    """Rank of a rational matrix by fraction-free Gaussian elimination.

    Parameters
    ----------
    rows : iterable of sequences
        Matrix rows; entries may be ``int`` or ``Fraction``.

    Returns
    -------
    int

    Examples
    --------
    >>> bareiss_rank([[1, 2], [2, 4]])
    1
    """
    M = integer_rows(rows)
    if not M:
        return 0
    m, n = len(M), len(M[0])
    rank = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(rank, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        a = pr[c]
        for i in range(rank + 1, m):
            row = M[i]
            b = row[c]
            if b == 0:
                for j in range(c + 1, n):
                    row[j] = row[j] * a // prev
            else:
                for j in range(c + 1, n):
                    row[j] = (row[j] * a - b * pr[j]) // prev
            row[c] = 0
        prev = a
        rank += 1
        if rank == m:
            break
    return rank


Row = dict  # column index -> Fraction


class SparseEchelon:
    """Incremental sparse row echelon form over the rationals.

    Columns are integers; the leading entry of a row is its smallest
    column.  Pivot rows are normalized to leading coefficient 1 but are not
    inter-reduced, so :meth:`reduce` may need several passes per column.

    Parameters
    ----------
    track : bool
        When true, every pivot row remembers its expression as a rational
        combination of the tagged rows passed to :meth:`insert`.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots: dict[int, Row] = {}
        self.combos: dict[int, dict[Hashable, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Fraction], combo=None):
        """Reduce ``row`` against the stored pivots.

        Returns
        -------
        remainder : dict
            Entries in non-pivot columns only.
        combo : dict or None
            With tracking: ``row - remainder`` written as a combination of
            inserted tags (``combo`` seeds the bookkeeping).
        """
        row = {c: Fraction(v) for c, v in row.items() if v}
        combo = dict(combo) if combo is not None else ({} if self.track else None)
        heap = [c for c in row if c in self.pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            v = row.get(c)
            if not v:
                continue
            prow = self.pivots[c]
            for cc, pv in prow.items():
                nv = row.get(cc, 0) - v * pv
                if nv:
                    if cc not in row and cc in self.pivots:
                        heapq.heappush(heap, cc)
                    row[cc] = nv
                else:
                    row.pop(cc, None)
            if combo is not None:
                for t, w in self.combos[c].items():
                    nw = combo.get(t, 0) + v * w
                    if nw:
                        combo[t] = nw
                    else:
                        combo.pop(t, None)
        return row, combo

    def insert(self, row: Mapping[int, Fraction], tag: Hashable = None) -> bool:
        """Add a row; returns ``True`` when it increased the rank."""
        seed = {tag: Fraction(-1)} if self.track else None
        rem, combo = self.reduce(row, seed)
        if not rem:
            return False
        lead = min(rem)
        a = rem[lead]
        self.pivots[lead] = {c: v / a for c, v in rem.items()}
        if self.track:
            # rem = row - sum(...) ; store pivot = rem / a as a combination of
            # inserted rows: pivot = -(combo) / a with combo seeded by -row.
            self.combos[lead] = {t: -w / a for t, w in combo.items()}
        return True
