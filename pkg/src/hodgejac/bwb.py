"""Borel-Weil-Bott cohomology of homogeneous bundles on flag varieties.

A weight ``lam`` defines the line bundle on ``G/B`` whose space of global
sections is the irreducible module of highest weight ``lam`` when ``lam`` is
dominant.  Tangent directions of ``G/P`` carry the positive roots outside the
Levi, so the cotangent bundle has the negatives of those roots as weights.

Bundles that are only filtered by line bundles (the adjoint bundle of ``P``,
exterior powers of the cotangent bundle) are handled factor by factor: the
cohomology of each factor bounds the cohomology of the bundle degree by
degree, and the Euler characteristic is additive, hence exact.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .rootsys import (
    Parabolic,
    RootSystem,
    RootSystemError,
    Weight,
    check_weight,
    format_weight,
    regularize,
    weyl_dim,
)


@dataclass(frozen=True)
class CohomologyEntry:
    degree: int
    highest_weight: Weight
    dimension: int

    def label(self) -> str:
        return f"H^{self.degree} = V({format_weight(self.highest_weight)}) [dim {self.dimension}]"


@dataclass(frozen=True)
class CohomologyResult:
    """Cohomology of an irreducible bundle: empty or a single entry."""

    entries: tuple[CohomologyEntry, ...] = ()

    @property
    def zero(self) -> bool:
        return not self.entries

    def dimension(self, degree: int) -> int:
        return sum(e.dimension for e in self.entries if e.degree == degree)

    def euler_characteristic(self) -> int:
        return sum((-1) ** e.degree * e.dimension for e in self.entries)

    def as_dict(self) -> dict:
        return {
            "zero": self.zero,
            "entries": [
                {"degree": e.degree, "highest_weight": list(e.highest_weight),
                 "dimension": e.dimension}
                for e in self.entries
            ],
        }


def line_bundle_cohomology(rs: RootSystem, lam: Sequence[int]) -> CohomologyResult:
    """Cohomology of the line bundle of weight ``lam`` on ``G/B``.

    Examples
    --------
    >>> from hodgejac.rootsys import build_root_system
    >>> line_bundle_cohomology(build_root_system("A", 3), (2, -2, 2)).entries[0].label()
    'H^1 = V(101) [dim 15]'
    """
    reg = regularize(rs, lam)
    if reg is None:
        return CohomologyResult()
    return CohomologyResult((CohomologyEntry(reg.length, reg.weight, weyl_dim(rs, reg.weight)),))


def is_levi_dominant(rs: RootSystem, parabolic: Parabolic, lam: Sequence[int]) -> bool:
    return all(lam[i] >= 0 for i in range(rs.rank) if (i + 1) not in parabolic.removed)


def gp_bundle_cohomology(rs: RootSystem, parabolic: Parabolic,
                         lam: Sequence[int]) -> CohomologyResult:
    """Cohomology of the irreducible homogeneous bundle on ``G/P`` with
    highest weight ``lam`` (pulled back to ``G/B``, cohomology unchanged).

    Raises
    ------
    RootSystemError
        If ``lam`` is not dominant for the Levi factor of ``P``.
    """
    lam = check_weight(rs, lam)
    parabolic.validate(rs, proper=False)
    if not is_levi_dominant(rs, parabolic, lam):
        raise RootSystemError(f"weight {lam} is not dominant for the Levi of P")
    return line_bundle_cohomology(rs, lam)


@dataclass(frozen=True)
class FilteredBundle:
    """A bundle known through the weights of its line-bundle factors on G/B."""

    weights: tuple[Weight, ...]
    label: str = ""
    #: Optional filtration index of each factor, used by :func:`e1_page`.
    levels: tuple[int, ...] | None = None

    def __post_init__(self):
        if not self.weights:
            raise ValueError("a filtered bundle needs at least one factor")
        if self.levels is not None and len(self.levels) != len(self.weights):
            raise ValueError("levels must run parallel to weights")

    @property
    def rank(self) -> int:
        return len(self.weights)

    def multiset(self) -> Counter:
        return Counter(self.weights)


def weights_of_p(rs: RootSystem, parabolic: Parabolic) -> FilteredBundle:
    """Weights of ``p = t + sum of root spaces for negative roots and Levi roots``."""
    parabolic.validate(rs, proper=False)
    ws: list[Weight] = [rs.zero()] * rs.rank
    for c in rs.positive_roots:
        w = rs.root_weight(c)
        ws.append(tuple(-x for x in w))
        if parabolic.in_levi(c):
            ws.append(w)
    return FilteredBundle(tuple(ws), f"p ({rs.name}, removed {sorted(parabolic.removed)})")


def tangent_roots(rs: RootSystem, parabolic: Parabolic) -> list[tuple[int, ...]]:
    """Positive roots outside the Levi, the weights of ``g/p``."""
    return [c for c in rs.positive_roots if not parabolic.in_levi(c)]


def wedge_cotangent_weights(rs: RootSystem, parabolic: Parabolic, q: int) -> FilteredBundle:
    """Weights of the ``q``-th exterior power of the cotangent bundle of ``G/P``."""
    parabolic.validate(rs, proper=False)
    roots = [rs.root_weight(c) for c in tangent_roots(rs, parabolic)]
    if not 0 <= q <= len(roots):
        raise ValueError(f"q={q} outside 0..{len(roots)}")
    ws = []
    for combo in combinations(roots, q):
        ws.append(tuple(-sum(r[j] for r in combo) for j in range(rs.rank)))
    return FilteredBundle(tuple(ws), f"Omega^{q}")


def wedge_tangent_weights(rs: RootSystem, parabolic: Parabolic, q: int) -> FilteredBundle:
    """Weights of ``wedge^q`` of the tangent bundle (sums of distinct roots)."""
    cot = wedge_cotangent_weights(rs, parabolic, q)
    return FilteredBundle(tuple(tuple(-x for x in w) for w in cot.weights), f"wedge^{q} T")


@dataclass(frozen=True)
class FactorCohomology:
    weight: Weight          # factor weight before twisting
    twisted: Weight
    result: CohomologyResult


@dataclass
class CohomologyBound:
    """Degreewise upper bounds from the line-bundle factors of a filtration.

    ``per_degree_upper[d]`` lists ``(highest_weight, dimension)`` once per
    contributing factor.  ``exact`` is true when at most one degree receives
    contributions; then the bounds are the actual cohomology.
    """

    per_degree_upper: dict[int, tuple[tuple[Weight, int], ...]]
    euler_char: int
    exact: bool
    factors: tuple[FactorCohomology, ...] = field(default=(), repr=False)

    def upper(self, degree: int) -> int:
        return sum(d for _, d in self.per_degree_upper.get(degree, ()))

    def nonzero_degrees(self) -> list[int]:
        return sorted(d for d, v in self.per_degree_upper.items() if v)

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "euler_char": self.euler_char,
            "per_degree_upper": {
                str(d): [{"highest_weight": list(w), "dimension": dim} for w, dim in v]
                for d, v in sorted(self.per_degree_upper.items())
            },
        }


def _aggregate(entries: Iterable[tuple[int, Weight, int]]) -> dict[int, tuple]:
    per: dict[int, list] = defaultdict(list)
    for deg, w, dim in entries:
        per[deg].append((w, dim))
    return {d: tuple(sorted(v, key=lambda t: (-t[1], t[0]))) for d, v in sorted(per.items())}


def filtered_cohomology_bound(rs: RootSystem, fb: FilteredBundle,
                              twist: Sequence[int] | None = None) -> CohomologyBound:
    """Bound the cohomology of ``fb`` twisted by the line bundle ``twist``.

    Each factor ``mu`` contributes ``line_bundle_cohomology(mu + twist)`` to
    a single degree; the Euler characteristic is the signed total.
    """
    twist = check_weight(rs, twist) if twist is not None else rs.zero()
    cache: dict[Weight, CohomologyResult] = {}
    factors = []
    entries = []
    for mu in fb.weights:
        t = tuple(a + b for a, b in zip(mu, twist))
        res = cache.get(t)
        if res is None:
            res = cache[t] = line_bundle_cohomology(rs, t)
        factors.append(FactorCohomology(tuple(mu), t, res))
        for e in res.entries:
            entries.append((e.degree, e.highest_weight, e.dimension))
    per = _aggregate(entries)
    euler = sum((-1) ** d * dim for d, _, dim in entries)
    return CohomologyBound(per, euler, exact=len(per) <= 1, factors=tuple(factors))


def wedge2_tangent_by_height(rs: RootSystem) -> FilteredBundle:
    """``wedge^2`` of the tangent bundle of ``G/B`` filtered by root height.

    The tangent bundle is filtered by the height of the positive roots, top
    height first; ``wedge^2`` inherits the filtration whose factors are the
    pairs of levels ``(i, j)`` with ``i <= j``, numbered lexicographically.
    """
    roots = list(rs.positive_roots)
    top = max(sum(c) for c in roots)
    level = {c: top - sum(c) for c in roots}
    pairs = sorted({(min(level[a], level[b]), max(level[a], level[b]))
                    for a, b in combinations(roots, 2)})
    index = {pr: i for i, pr in enumerate(pairs)}
    ws, lv = [], []
    for a, b in combinations(roots, 2):
        ws.append(tuple(x + y for x, y in zip(rs.root_weight(a), rs.root_weight(b))))
        lv.append(index[(min(level[a], level[b]), max(level[a], level[b]))])
    return FilteredBundle(tuple(ws), "wedge^2 T (height filtration)", tuple(lv))


def e1_page(rs: RootSystem, fb: FilteredBundle,
            twist: Sequence[int] | None = None) -> dict[int, dict[int, list[Weight]]]:
    """First page of the spectral sequence of a filtered bundle.

    Returns ``{filtration index: {cohomological degree: [highest weights]}}``
    built from the line-bundle factors; only nonzero entries are listed.
    Filtration indices come from ``fb.levels`` (all zero when absent).
    """
    bound = filtered_cohomology_bound(rs, fb, twist)
    levels = fb.levels if fb.levels is not None else (0,) * fb.rank
    page: dict[int, dict[int, list[Weight]]] = {}
    for lv, fac in zip(levels, bound.factors):
        for e in fac.result.entries:
            page.setdefault(lv, {}).setdefault(e.degree, []).append(e.highest_weight)
    for cols in page.values():
        for ws in cols.values():
            ws.sort(reverse=True)
    return dict(sorted(page.items()))
