"""Ambient spaces and their graded section rings.

Three models are provided:

:class:`ProjectiveSpace`
    ``P^n`` with ``L = O(d)``; ``R^k`` is spanned by monomials of degree
    ``k d`` in ``x_0..x_n`` and ``K = O(-n-1)``.
:class:`Grassmannian`
    ``G(a, b)`` in its Plücker embedding with ``L = O(d)``; ``R^k`` is the
    degree ``k d`` part of the Plücker coordinate ring and ``K = O(-b)``.
:class:`TorusHypersurface`
    The torus ``(C^*)^n`` with a lattice polytope ``Delta``; ``R^k`` is
    spanned by the lattice points of ``k Delta``.

Every model works with an *internal degree* ``e``: the polynomial degree for
the two projective models and ``k`` itself for the torus, where Laurent
monomials carry an extra leading coordinate recording ``k``.  The space of
internal degree ``e`` is a :class:`GradedSpace`: a standard monomial basis
together with a normal form for every monomial that products can produce.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import comb

import numpy as np
import scipy.sparse as sp

from .errors import PreconditionError
from .linalg.exact import SparseEchelon
from .linalg.modular import fraction_mod
from .monomials import MonomialIndex
from .poly import Monomial, MultiPoly, monomials_of_degree, parse_poly
from .rootsys import Parabolic, RootSystem, build_root_system, weyl_dim

log = logging.getLogger(__name__)


class GradedSpace:
    """One graded piece: standard basis plus normal forms of monomials.

    Parameters
    ----------
    basis : list of monomials
        Standard monomials; coordinates are taken with respect to them.
    ambient : list of monomials, optional
        All monomials that may occur (defaults to ``basis``).
    nf : list of dict, optional
        ``nf[i]`` maps basis positions to coefficients for ``ambient[i]``.
    """

    def __init__(self, nvars: int, basis: Sequence[Monomial],
                 ambient: Sequence[Monomial] | None = None,
                 nf: list[dict[int, Fraction]] | None = None):
        self.nvars = nvars
        self.basis = list(basis)
        self.basis_index = MonomialIndex(self.basis, nvars)
        if ambient is None:
            self.ambient = self.basis
            self.ambient_index = self.basis_index
            self.nf = None
        else:
            self.ambient = list(ambient)
            self.ambient_index = MonomialIndex(self.ambient, nvars)
            self.nf = nf
        self._nf_mod: dict[int, sp.csr_matrix] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_identity(self) -> bool:
        return self.nf is None

    def basis_polys(self) -> list[MultiPoly]:
        return [MultiPoly(self.nvars, {m: 1}) for m in self.basis]

    def coordinates(self, poly: MultiPoly) -> dict[int, Fraction]:
        """Exact coordinates of ``poly`` in the standard basis.

        Raises
        ------
        PreconditionError
            If a term lies outside this graded piece.
        """
        out: dict[int, Fraction] = {}
        for e, c in poly.terms.items():
            i = self.ambient_index.index(e)
            if i < 0:
                raise PreconditionError(f"monomial {e} does not lie in this graded piece")
            if self.nf is None:
                items = ((i, Fraction(1)),)
            else:
                items = self.nf[i].items()
            for j, v in items:
                nv = out.get(j, 0) + c * v
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out

    def from_coordinates(self, coords: dict[int, Fraction]) -> MultiPoly:
        return MultiPoly(self.nvars, {self.basis[j]: c for j, c in coords.items()})

    def normal_form(self, poly: MultiPoly) -> MultiPoly:
        return self.from_coordinates(self.coordinates(poly))

    def nf_matrix_mod(self, p: int) -> sp.csr_matrix:
        """Normal-form matrix (ambient x basis) with entries reduced mod ``p``."""
        if p not in self._nf_mod:
            rows, cols, vals = [], [], []
            for i, d in enumerate(self.nf):
                for j, v in d.items():
                    rows.append(i)
                    cols.append(j)
                    vals.append(fraction_mod(v, p))
            self._nf_mod[p] = sp.csr_matrix(
                (np.array(vals, dtype=np.int64), (rows, cols)),
                shape=(len(self.ambient), self.dim))
        return self._nf_mod[p]


class AmbientModel:
    """Common interface of the ambient models."""

    kind: str = "abstract"
    #: complex dimension of the ambient variety
    dim: int
    #: number of variables of the internal polynomial representation
    nvars: int

    # grading -----------------------------------------------------------
    def section_degree(self, k: int) -> int:
        """Internal degree of ``R^k``."""
        raise NotImplementedError

    def m_degree(self, k: int) -> int | None:
        """Internal degree of ``M^k`` (``None`` when ``M^k = 0``)."""
        raise NotImplementedError

    def space(self, e: int) -> GradedSpace:
        raise NotImplementedError

    def sections_basis(self, k: int) -> list[MultiPoly]:
        if k < 0:
            raise PreconditionError("k must be non-negative")
        return self.space(self.section_degree(k)).basis_polys()

    def m_basis(self, k: int) -> list[MultiPoly]:
        if k < 0:
            raise PreconditionError("k must be non-negative")
        e = self.m_degree(k)
        return [] if e is None else self.space(e).basis_polys()

    # sections ------------------------------------------------------------
    def prepare_section(self, f: MultiPoly) -> MultiPoly:
        """Validate ``f`` as an element of ``R^1`` and return its normal form."""
        if f.nvars != self.nvars:
            raise PreconditionError(f"section has {f.nvars} variables, model needs {self.nvars}")
        e = self.section_degree(1)
        if f.is_zero():
            raise PreconditionError("the zero section defines no hypersurface")
        return self.space(e).normal_form(f)

    def lie_derivative_generators(self, f: MultiPoly) -> list[MultiPoly]:
        raise NotImplementedError

    def random_section(self, seed: int, coeff_bound: int = 10) -> MultiPoly:
        """Pseudo-random integer combination of the degree-one sections.

        The same ``seed`` always produces the same polynomial.
        """
        if coeff_bound < 1:
            raise PreconditionError("coeff_bound must be at least 1")
        basis = self.space(self.section_degree(1)).basis
        rng = np.random.default_rng(seed)
        coeffs = rng.integers(-coeff_bound, coeff_bound + 1, size=len(basis))
        if not coeffs.any():
            coeffs[0] = 1
        return MultiPoly(self.nvars, {m: int(c) for m, c in zip(basis, coeffs)})

    def parse_section(self, text: str) -> MultiPoly:
        return parse_poly(text, self.nvars)

    # geometry ------------------------------------------------------------
    def homogeneous_data(self) -> tuple[RootSystem, Parabolic, tuple[int, ...]] | None:
        """``(root system, parabolic, weight of L)`` for ``G/P`` models."""
        return None

    def is_calabi_yau(self) -> bool:
        return False

    def hodge_label(self, k: int) -> str:
        n = self.dim
        return f"F^{n - k}/F^{n - k + 1} H^{n}(U)"

    def describe(self) -> dict:
        raise NotImplementedError


def _pn_space(nvars: int, e: int) -> GradedSpace:
    return GradedSpace(nvars, monomials_of_degree(nvars, e))


@dataclass(eq=False)
class ProjectiveSpace(AmbientModel):
    """``P^n`` with ``L = O(d)``."""

    n: int
    d: int
    kind: str = field(default="projective", init=False)
    _spaces: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise PreconditionError("projective space needs n >= 1 and d >= 1")
        self.dim = self.n
        self.nvars = self.n + 1

    def section_degree(self, k: int) -> int:
        return k * self.d

    def m_degree(self, k: int) -> int | None:
        e = (k + 1) * self.d - (self.n + 1)
        return e if e >= 0 else None

    def space(self, e: int) -> GradedSpace:
        if e not in self._spaces:
            self._spaces[e] = _pn_space(self.nvars, e)
        return self._spaces[e]

    def lie_derivative_generators(self, f: MultiPoly) -> list[MultiPoly]:
        """``f`` and ``x_j df/dx_i`` for all ``i, j``."""
        f = self.prepare_section(f)
        gens = [f]
        for i in range(self.nvars):
            for j in range(self.nvars):
                gens.append(f.polarize(j, i))
        return gens

    def homogeneous_data(self):
        rs = build_root_system("A", self.n)
        return rs, Parabolic([1]), tuple(self.d if i == 0 else 0 for i in range(self.n))

    def is_calabi_yau(self) -> bool:
        return self.d == self.n + 1

    def describe(self) -> dict:
        return {"kind": self.kind, "n": self.n, "d": self.d}


# ---------------------------------------------------------------------------
# Grassmannians

def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple (sign 0 on repeats)."""
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return 0, tuple(sorted(idx))
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


class PluckerRing:
    """Homogeneous coordinate ring of ``G(a, b)`` in the Plücker embedding.

    Variables are the ``a``-subsets of ``{1..b}`` in lexicographic order.
    Each graded piece is computed by row reducing the corresponding slice of
    the Plücker ideal; the standard basis consists of the monomials that are
    not leading monomials of the reduced slice.
    """

    def __init__(self, a: int, b: int):
        if not 1 <= a < b:
            raise PreconditionError(f"G({a},{b}) needs 1 <= a < b")
        self.a, self.b = a, b
        self.subsets = list(combinations(range(1, b + 1), a))
        self.position = {s: i for i, s in enumerate(self.subsets)}
        self.nvars = len(self.subsets)
        self._spaces: dict[int, GradedSpace] = {}
        self.rs = build_root_system("A", b - 1)

    # naming ----------------------------------------------------------
    def name(self, i: int) -> str:
        return "p" + "".join(map(str, self.subsets[i]))

    def names(self) -> dict[str, tuple[int, int]]:
        """Variable names (every ordering of every subset) to ``(index, sign)``."""
        if self.b > 9:
            raise PreconditionError("named Plücker variables need b <= 9")
        from itertools import permutations

        out = {}
        for i, s in enumerate(self.subsets):
            for perm in permutations(s):
                sign, _ = _sort_sign(perm)
                out["p" + "".join(map(str, perm))] = (i, sign)
        return out

    def variable_term(self, idx: Sequence[int]) -> tuple[int, int] | None:
        sign, srt = _sort_sign(idx)
        if sign == 0:
            return None
        return sign, self.position[srt]

    # relations ---------------------------------------------------------
    @cached_property
    def relations(self) -> list[dict[Monomial, int]]:
        """Quadratic Plücker relations ``sum_l (-1)^l p_{I j_l} p_{J - j_l}``."""
        out = []
        seen = set()
        N = self.nvars
        for I in combinations(range(1, self.b + 1), self.a - 1):
            for J in combinations(range(1, self.b + 1), self.a + 1):
                rel: dict[Monomial, int] = {}
                for l, j in enumerate(J):
                    t1 = self.variable_term(I + (j,))
                    t2 = self.variable_term(J[:l] + J[l + 1:])
                    if t1 is None or t2 is None:
                        continue
                    e = [0] * N
                    e[t1[1]] += 1
                    e[t2[1]] += 1
                    e = tuple(e)
                    v = rel.get(e, 0) + (-1) ** l * t1[0] * t2[0]
                    if v:
                        rel[e] = v
                    else:
                        rel.pop(e, None)
                if rel:
                    key = tuple(sorted(rel.items()))
                    neg = tuple(sorted((e, -c) for e, c in rel.items()))
                    if key not in seen and neg not in seen:
                        seen.add(key)
                        out.append(rel)
        return out

    def space(self, e: int) -> GradedSpace:
        """Standard basis and normal forms in Plücker degree ``e``."""
        if e in self._spaces:
            return self._spaces[e]
        N = self.nvars
        monos = monomials_of_degree(N, e)
        if e < 2 or not self.relations:
            gs = GradedSpace(N, monos)
        else:
            idx = MonomialIndex(monos, N)
            ech = SparseEchelon()
            shifts = monomials_of_degree(N, e - 2)
            sh = np.array(shifts, dtype=np.int64).reshape(len(shifts), N)
            for rel in self.relations:
                terms = list(rel.items())
                exps = np.array([t for t, _ in terms], dtype=np.int64)
                pos = idx.lookup(sh[:, None, :] + exps[None, :, :])
                for row in pos:
                    ech.insert({int(c): Fraction(v) for c, (_, v) in zip(row, terms)})
            pivots = ech.pivots
            std = [i for i in range(len(monos)) if i not in pivots]
            std_pos = {i: j for j, i in enumerate(std)}
            nf: list[dict[int, Fraction] | None] = [None] * len(monos)
            for i in range(len(monos) - 1, -1, -1):
                if i in std_pos:
                    nf[i] = {std_pos[i]: Fraction(1)}
                    continue
                acc: dict[int, Fraction] = {}
                for c, v in pivots[i].items():
                    if c == i:
                        continue
                    for j, w in nf[c].items():
                        nv = acc.get(j, 0) - v * w
                        if nv:
                            acc[j] = nv
                        else:
                            acc.pop(j, None)
                nf[i] = acc
            gs = GradedSpace(N, [monos[i] for i in std], monos, nf)
        expected = weyl_dim(self.rs, tuple(e if i == self.a - 1 else 0 for i in range(self.b - 1)))
        if gs.dim != expected:  # pragma: no cover - guards the construction
            raise AssertionError(f"Plücker degree {e}: basis {gs.dim} != Weyl dimension {expected}")
        self._spaces[e] = gs
        return gs

    # Lie algebra action ------------------------------------------------
    def act_variable(self, i: int, j: int, v: int) -> tuple[int, int] | None:
        """``E_ij`` applied to the variable ``v``: ``(sign, index)`` or None."""
        s = self.subsets[v]
        if j not in s:
            return None
        if i == j:
            return 1, v
        return self.variable_term(tuple(i if x == j else x for x in s))

    def act(self, i: int, j: int, f: MultiPoly) -> MultiPoly:
        """Derivation extending the action of the matrix unit ``E_ij``."""
        out: dict[Monomial, Fraction] = {}
        for e, c in f.terms.items():
            for v, ev in enumerate(e):
                if not ev:
                    continue
                t = self.act_variable(i, j, v)
                if t is None:
                    continue
                sign, w = t
                ne = list(e)
                ne[v] -= 1
                ne[w] += 1
                ne = tuple(ne)
                val = out.get(ne, 0) + sign * ev * c
                if val:
                    out[ne] = val
                else:
                    out.pop(ne, None)
        return MultiPoly(f.nvars, out)


_PLUCKER_CACHE: dict[tuple[int, int], PluckerRing] = {}


def plucker_ring(a: int, b: int) -> PluckerRing:
    key = (a, b)
    if key not in _PLUCKER_CACHE:
        _PLUCKER_CACHE[key] = PluckerRing(a, b)
    return _PLUCKER_CACHE[key]


@dataclass(eq=False)
class Grassmannian(AmbientModel):
    """``G(a, b)`` with ``L = O(d)``."""

    a: int
    b: int
    d: int
    kind: str = field(default="grassmannian", init=False)

    def __post_init__(self):
        if not 1 <= self.a < self.b or self.d < 1:
            raise PreconditionError("Grassmannian needs 1 <= a < b and d >= 1")
        self.ring = plucker_ring(self.a, self.b)
        self.dim = self.a * (self.b - self.a)
        self.nvars = self.ring.nvars

    def section_degree(self, k: int) -> int:
        return k * self.d

    def m_degree(self, k: int) -> int | None:
        e = (k + 1) * self.d - self.b
        return e if e >= 0 else None

    def space(self, e: int) -> GradedSpace:
        return self.ring.space(e)

    def parse_section(self, text: str) -> MultiPoly:
        return parse_poly(text, self.nvars, names=self.ring.names())

    def lie_derivative_generators(self, f: MultiPoly) -> list[MultiPoly]:
        """``f`` and ``E_ij f`` for every matrix unit of ``gl_b``, in normal form."""
        f = self.prepare_section(f)
        sp_ = self.space(self.section_degree(1))
        gens = [f]
        for i in range(1, self.b + 1):
            for j in range(1, self.b + 1):
                gens.append(sp_.normal_form(self.ring.act(i, j, f)))
        return gens

    def homogeneous_data(self):
        rs = build_root_system("A", self.b - 1)
        L = tuple(self.d if i == self.a - 1 else 0 for i in range(self.b - 1))
        return rs, Parabolic([self.a]), L

    def is_calabi_yau(self) -> bool:
        return self.d == self.b

    def describe(self) -> dict:
        return {"kind": self.kind, "a": self.a, "b": self.b, "d": self.d}


# ---------------------------------------------------------------------------
# torus with a Newton polytope

def _nullspace_vector(rows: list[list[Fraction]], n: int) -> list[Fraction] | None:
    """A nonzero solution of ``rows . x = 0`` if the solution space is a line."""
    M = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(n) if c not in piv_cols]
    if len(free) != 1:
        return None
    x = [Fraction(0)] * n
    x[free[0]] = Fraction(1)
    for i, c in enumerate(piv_cols):
        x[c] = -M[i][free[0]]
    return x


def polytope_facets(points: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Facet inequalities ``a . x <= c`` (primitive integer ``a``) of the
    convex hull of integer points.

    Raises
    ------
    PreconditionError
        If the hull is not full-dimensional.
    """
    from math import gcd

    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise PreconditionError("empty polytope")
    n = len(pts[0])
    facets = set()
    for subset in combinations(pts, n):
        base = subset[0]
        rows = [[Fraction(v - b) for v, b in zip(q, base)] for q in subset[1:]]
        a = _nullspace_vector(rows, n)
        if a is None:
            continue
        den = 1
        for x in a:
            den = den * x.denominator // gcd(den, x.denominator)
        ai = [int(x * den) for x in a]
        g = 0
        for x in ai:
            g = gcd(g, abs(x))
        ai = [x // g for x in ai]
        vals = [sum(x * y for x, y in zip(ai, q)) for q in pts]
        for sign in (1, -1):
            s = [sign * v for v in vals]
            c = sign * sum(x * y for x, y in zip(ai, base))
            if max(s) == c and min(s) < c:
                facets.add((tuple(sign * x for x in ai), c))
    if len(facets) < n + 1:
        raise PreconditionError("polytope is not full-dimensional")
    return sorted(facets)


def lattice_points(facets, k: int, lo: Sequence[int], hi: Sequence[int]) -> list[tuple[int, ...]]:
    """Lattice points of ``k * Delta`` inside the box ``k*lo .. k*hi``."""
    n = len(lo)
    if k == 0:
        return [(0,) * n]
    ranges = [range(k * lo[i], k * hi[i] + 1) for i in range(n)]
    A = np.array([a for a, _ in facets], dtype=np.int64)
    c = np.array([cc for _, cc in facets], dtype=np.int64) * k
    grid = np.array(list(product(*ranges)), dtype=np.int64).reshape(-1, n)
    ok = np.all(grid @ A.T <= c, axis=1)
    return [tuple(int(x) for x in row) for row in grid[ok]]


@dataclass(eq=False)
class TorusHypersurface(AmbientModel):
    """The torus ``(C^*)^n`` graded by the dilates of a lattice polytope.

    Internal monomials are ``(k, m_1, ..., m_n)`` with ``m`` in ``k Delta``;
    the first coordinate records the grading.  Sections may be given either
    in this form or as Laurent polynomials in ``n`` variables.
    """

    vertices: tuple[tuple[int, ...], ...]
    kind: str = field(default="torus", init=False)
    _spaces: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self.vertices = tuple(sorted({tuple(int(x) for x in v) for v in self.vertices}))
        if not self.vertices:
            raise PreconditionError("torus model needs a polytope")
        self.dim = len(self.vertices[0])
        self.nvars = self.dim + 1
        self.facets = polytope_facets(self.vertices)
        arr = np.array(self.vertices)
        self._lo = arr.min(axis=0).tolist()
        self._hi = arr.max(axis=0).tolist()

    def section_degree(self, k: int) -> int:
        return k

    def m_degree(self, k: int) -> int | None:
        return k + 1

    def lattice_points(self, k: int) -> list[tuple[int, ...]]:
        return lattice_points(self.facets, k, self._lo, self._hi)

    def space(self, e: int) -> GradedSpace:
        if e not in self._spaces:
            pts = sorted(((e,) + p for p in self.lattice_points(e)),
                         key=lambda t: tuple(-x for x in t))
            self._spaces[e] = GradedSpace(self.nvars, pts)
        return self._spaces[e]

    def normalized_volume(self) -> int:
        """``n! Vol(Delta)`` via the leading coefficient of the Ehrhart
        polynomial, interpolated from lattice point counts."""
        n = self.dim
        counts = [len(self.lattice_points(k)) for k in range(n + 1)]
        # n-th finite difference of a degree-n polynomial = n! * leading coeff
        diff = sum((-1) ** (n - k) * comb(n, k) * counts[k] for k in range(n + 1))
        return diff

    def random_section(self, seed: int, coeff_bound: int = 10) -> MultiPoly:
        """As for the other models, but vertex coefficients are never zero so
        that the Newton polytope of the section is the whole polytope."""
        f = super().random_section(seed, coeff_bound)
        rng = np.random.default_rng([seed, 1])
        terms = dict(f.terms)
        for v in self.vertices:
            m = (1,) + v
            if m not in terms:
                c = int(rng.integers(1, coeff_bound + 1))
                terms[m] = c if rng.integers(2) else -c
        return MultiPoly(self.nvars, terms)

    def prepare_section(self, f: MultiPoly) -> MultiPoly:
        if f.nvars == self.dim:
            f = MultiPoly(self.nvars, {(1,) + e: c for e, c in f.terms.items()})
        return super().prepare_section(f)

    def to_laurent(self, f: MultiPoly) -> MultiPoly:
        return MultiPoly(self.dim, {e[1:]: c for e, c in f.terms.items()})

    def parse_section(self, text: str) -> MultiPoly:
        return parse_poly(text, self.dim)

    def lie_derivative_generators(self, f: MultiPoly) -> list[MultiPoly]:
        """``f`` and ``theta_i f = x_i df/dx_i`` for ``i = 1..n``."""
        f = self.prepare_section(f)
        return [f] + [f.euler(i) for i in range(1, self.nvars)]

    def hodge_label(self, k: int) -> str:
        n = self.dim
        return f"Gr_F^{n - k} H^{n}(T - Y)"

    def describe(self) -> dict:
        return {"kind": self.kind, "vertices": [list(v) for v in self.vertices]}


def parse_model(spec: str, degree: int | None = None, vertices: str | None = None) -> AmbientModel:
    """Build a model from a compact label: ``P4``, ``G2,4`` or ``torus``.

    ``vertices`` for the torus model is a ``;``-separated list of points.
    """
    s = spec.strip().replace(" ", "")
    if s.upper().startswith("P") and s[1:].isdigit():
        if degree is None:
            raise PreconditionError("projective model needs a degree")
        return ProjectiveSpace(int(s[1:]), degree)
    if s.upper().startswith("G"):
        body = s[1:].strip("()")
        try:
            a, b = (int(x) for x in body.split(","))
        except ValueError:
            raise PreconditionError(f"cannot parse Grassmannian label {spec!r}") from None
        if degree is None:
            raise PreconditionError("Grassmannian model needs a degree")
        return Grassmannian(a, b, degree)
    if s.lower() == "torus":
        if not vertices:
            raise PreconditionError("torus model needs --vertices")
        pts = [tuple(int(x) for x in v.split(",")) for v in vertices.split(";") if v.strip()]
        return TorusHypersurface(tuple(pts))
    raise PreconditionError(f"unknown model {spec!r}")
