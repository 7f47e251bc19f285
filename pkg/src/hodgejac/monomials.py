"""Vectorised monomial bookkeeping shared by the ambient models."""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import lcm

import numpy as np

from .poly import Monomial, MultiPoly


class MonomialIndex:
    """Position lookup for a fixed list of exponent vectors.

    Parameters
    ----------
    monos : sequence of tuples or 2-d integer array
        The indexed monomials; their order defines the positions.
    """

    def __init__(self, monos: Sequence[Monomial] | np.ndarray, nvars: int | None = None):
        arr = np.asarray(monos, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(len(arr), nvars if nvars is not None else 0)
        self.monos = arr
        self.nvars = arr.shape[1] if arr.size or nvars is None else nvars
        self.size = arr.shape[0]
        if self.size:
            self.offset = arr.min(axis=0)
            span = arr.max(axis=0) - self.offset + 1
        else:
            self.offset = np.zeros(self.nvars, dtype=np.int64)
            span = np.ones(self.nvars, dtype=np.int64)
        self.span = span
        self.radix = np.ones(self.nvars, dtype=np.int64)
        total = 1
        for i in range(self.nvars - 1, -1, -1):
            self.radix[i] = total
            total *= int(span[i])
        if total >= 2 ** 62:
            raise OverflowError("monomial key space too large for int64 keys")
        keys = self._keys(arr) if self.size else np.zeros(0, dtype=np.int64)
        self.order = np.argsort(keys, kind="stable")
        self.sorted_keys = keys[self.order]
        self._tuple_index: dict | None = None

    def _keys(self, exps: np.ndarray) -> np.ndarray:
        return (exps - self.offset) @ self.radix

    def __len__(self) -> int:
        return self.size

    def lookup(self, exps: np.ndarray) -> np.ndarray:
        """Positions of the rows of ``exps`` (``-1`` where absent)."""
        exps = np.asarray(exps, dtype=np.int64)
        shape = exps.shape[:-1]
        flat = exps.reshape(-1, self.nvars)
        out = np.full(flat.shape[0], -1, dtype=np.int64)
        if self.size == 0 or flat.shape[0] == 0:
            return out.reshape(shape)
        inside = np.all((flat >= self.offset) & (flat < self.offset + self.span), axis=1)
        keys = self._keys(flat[inside])
        pos = np.searchsorted(self.sorted_keys, keys)
        pos = np.minimum(pos, self.size - 1)
        hit = self.sorted_keys[pos] == keys
        res = np.where(hit, self.order[pos], -1)
        out[inside] = res
        return out.reshape(shape)

    def index(self, mono: Monomial) -> int:
        if self._tuple_index is None:
            self._tuple_index = {tuple(int(x) for x in m): i for i, m in enumerate(self.monos)}
        return self._tuple_index.get(tuple(mono), -1)

    def tuples(self) -> list[Monomial]:
        return [tuple(int(x) for x in m) for m in self.monos]


class IntTerms:
    """A polynomial scaled to integer coefficients, stored as arrays."""

    __slots__ = ("exps", "coeffs", "scale")

    def __init__(self, poly: MultiPoly):
        items = sorted(poly.terms.items())
        den = lcm(*(c.denominator for _, c in items)) if items else 1
        self.scale = Fraction(den)
        self.exps = (np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), poly.nvars))
        self.coeffs = [int(c * den) for _, c in items]

    def __len__(self) -> int:
        return len(self.coeffs)
