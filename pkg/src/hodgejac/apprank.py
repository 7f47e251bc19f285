"""Applications in the Calabi-Yau case and the multiplication criterion.

* :func:`rank_check_cy` compares ``dim M/JM`` with an independent value
  of ``dim H^n(X - Y)``.
* :func:`degree_bound_certificate` decides membership of a polynomial in
  the ideal ``J R`` degree by degree and, for members, returns cofactors
  ``r_i`` of degree at most ``deg h - 1`` with ``h = sum g_i r_i``.
* :func:`multiplication_surjectivity` computes the rank of
  ``H^0(L) x H^0(K + kL) -> H^0(K + (k+1)L)``.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .ambient import AmbientModel, Grassmannian, ProjectiveSpace, TorusHypersurface
from .assembly import product_rows, system_rank
from .errors import PreconditionError
from .jacring import GradedReport, jacobian_graded_dims
from .linalg.exact import SparseEchelon
from .oracles import expected_complement_total
from .poly import MultiPoly, format_poly

log = logging.getLogger(__name__)


def _require_cy(model: AmbientModel) -> None:
    if isinstance(model, TorusHypersurface) or not model.is_calabi_yau():
        raise PreconditionError("this operation needs a Calabi-Yau model "
                                "(P^n with d = n + 1, or G(a,b) with d = b)")


# rank identity --------------------------------------------------------------

@dataclass
class RankCheckResult:
    computed_total: int
    expected: int
    agree: bool
    dims: tuple[int, ...]
    oracle: str
    report: GradedReport | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        return {"computed_total": self.computed_total, "expected": self.expected,
                "agree": self.agree, "dims": list(self.dims), "oracle": self.oracle}


def expected_total(model: AmbientModel) -> tuple[int, str]:
    """Reference value of ``dim H^n(X - Y)`` and a description of its source."""
    if isinstance(model, ProjectiveSpace):
        return (expected_complement_total("projective", n=model.n),
                "Fermat monomial count")
    if isinstance(model, Grassmannian):
        return (expected_complement_total("grassmannian", a=model.a, b=model.b),
                "Chern classes of the (2,4) complete intersection in P^5 plus the Gysin sequence")
    raise PreconditionError(f"no reference value for {model.kind} models")


def rank_check_cy(model: AmbientModel, f: MultiPoly, *, method: str = "auto",
                  jobs: int = 1, report: GradedReport | None = None) -> RankCheckResult:
    """``sum_k dim (M/JM)^k`` for ``0 <= k <= n - 1`` against the oracle.

    A report already computed for ``f`` may be passed to avoid recomputing it.
    """
    _require_cy(model)
    expected, oracle = expected_total(model)
    if report is None:
        report = jacobian_graded_dims(model, f, model.dim - 1, method=method,
                                      check_hypotheses=False, jobs=jobs)
    total = sum(e.dim for e in report.per_degree if e.k <= model.dim - 1)
    dims = tuple(e.dim for e in report.per_degree if e.k <= model.dim - 1)
    return RankCheckResult(total, expected, total == expected, dims, oracle, report)


# membership certificates ----------------------------------------------------

@dataclass
class MembershipCertificate:
    """Outcome of the degree-by-degree reduction of ``h``.

    Attributes
    ----------
    member : bool
        ``True`` when every reduced coordinate vanishes.
    reduced : dict
        ``{R-degree: {surviving monomial: coefficient}}``; only nonzero
        coordinates are stored.
    representation : list of (int, MultiPoly)
        ``(generator index, cofactor)``; ``h - sum g_i r_i`` equals the
        reduced part exactly.
    """

    h: MultiPoly
    member: bool
    reduced: dict[int, dict[tuple[int, ...], Fraction]]
    representation: list[tuple[int, MultiPoly]]
    degree: int
    #: largest R-degree among the cofactors (``-1`` when there are none)
    max_cofactor_degree: int = -1

    def as_dict(self) -> dict:
        return {
            "h": format_poly(self.h),
            "member": self.member,
            "degree": self.degree,
            "reduced": {str(e): {",".join(map(str, m)): str(c) for m, c in sorted(d.items())}
                        for e, d in sorted(self.reduced.items())},
            "representation": [{"generator": i, "cofactor": format_poly(r)}
                               for i, r in self.representation],
            "max_cofactor_degree": self.max_cofactor_degree,
        }


class DegreeBoundCertifier:
    """Reusable per-degree echelon forms of ``J`` for one section ``f``.

    The generators are those of :meth:`AmbientModel.lie_derivative_generators`;
    they all lie in ``R^1``.  For each ``R``-degree ``e >= 1`` the products of
    the generators with the basis of ``R^{e-1}`` are row reduced once, with
    bookkeeping of the combination that produced every pivot.

    Exact rational elimination keeps the certificate free of any
    probabilistic step.  Its cost grows quickly with the density of ``f``:
    the sparse Fermat quintic reduces instantly in ``R^2`` while a dense
    quintic is only practical in ``R^1``.
    """

    def __init__(self, model: AmbientModel, f: MultiPoly, max_degree: int = 3):
        _require_cy(model)
        self.model = model
        self.f = model.prepare_section(f)
        self.generators = model.lie_derivative_generators(self.f)
        self.max_degree = max_degree
        self._echelons: dict[int, tuple] = {}

    def _echelon(self, e: int):
        if e not in self._echelons:
            model = self.model
            target = model.space(model.section_degree(e))
            source = model.space(model.section_degree(e - 1))
            system = product_rows(self.generators, source, target)
            E = SparseEchelon(track=True)
            for label, row in zip(system.labels, system.coordinate_rows()):
                if row:
                    E.insert(row, label)
            self._echelons[e] = (E, target, source)
        return self._echelons[e]

    def quotient_basis(self, e: int) -> list[tuple[int, ...]]:
        """Monomials spanning ``(R/J)^e``: the non-pivot standard monomials."""
        if e == 0:
            return list(self.model.space(0).basis)
        E, target, _ = self._echelon(e)
        return [m for j, m in enumerate(target.basis) if j not in E.pivots]

    def split(self, h: MultiPoly) -> dict[int, MultiPoly]:
        """Components of ``h`` by ``R``-degree."""
        if h.nvars != self.model.nvars:
            raise PreconditionError(f"h has {h.nvars} variables, model needs {self.model.nvars}")
        step = self.model.section_degree(1)
        parts: dict[int, dict] = {}
        for m, c in h.terms.items():
            deg = sum(m)
            if deg % step:
                raise PreconditionError(f"term of degree {deg} is not in any R^e")
            parts.setdefault(deg // step, {})[m] = c
        return {e: MultiPoly(h.nvars, t) for e, t in parts.items()}

    def certify(self, h: MultiPoly) -> MembershipCertificate:
        parts = self.split(h)
        degree = max(parts) if parts else 0
        if degree > self.max_degree:
            raise PreconditionError(f"deg h = {degree} exceeds the configured bound "
                                    f"{self.max_degree}")
        cof: dict[int, MultiPoly] = {}
        reduced: dict[int, dict] = {}
        for e in sorted(parts, reverse=True):
            space = self.model.space(self.model.section_degree(e))
            coords = space.coordinates(parts[e])
            if e == 0:
                if coords:
                    reduced[0] = {space.basis[j]: v for j, v in coords.items()}
                continue
            E, target, source = self._echelon(e)
            rem, combo = E.reduce(coords, {})
            if rem:
                reduced[e] = {target.basis[j]: v for j, v in sorted(rem.items())}
            for (gi, si), w in combo.items():
                term = MultiPoly(h.nvars, {source.basis[si]: w})
                cof[gi] = cof[gi] + term if gi in cof else term
        rep = [(i, cof[i]) for i in sorted(cof) if not cof[i].is_zero()]
        top = max((max(self.split(r)) for _, r in rep), default=-1)
        return MembershipCertificate(h, not reduced, reduced, rep, degree, top)

    def verify(self, cert: MembershipCertificate) -> bool:
        """Recompute ``h - sum g_i r_i`` exactly and compare with ``reduced``."""
        diff = cert.h
        for i, r in cert.representation:
            diff = diff - self.generators[i] * r
        for e, part in self.split(diff).items() if not diff.is_zero() else []:
            space = self.model.space(self.model.section_degree(e))
            coords = space.coordinates(part)
            got = {space.basis[j]: v for j, v in coords.items()}
            if got != cert.reduced.get(e, {}):
                return False
        if diff.is_zero() and cert.reduced:
            return False
        degree_ok = all(max(self.split(r)) <= cert.degree - 1 for _, r in cert.representation)
        return degree_ok


def degree_bound_certificate(model: AmbientModel, f: MultiPoly, h: MultiPoly, *,
                             certifier: DegreeBoundCertifier | None = None,
                             max_degree: int = 3) -> MembershipCertificate:
    """Membership of ``h`` in ``J R`` with degree-bounded cofactors.

    Pass a :class:`DegreeBoundCertifier` to reuse its echelon forms across
    many calls with the same ``f``.
    """
    if certifier is None:
        certifier = DegreeBoundCertifier(model, f, max_degree)
    return certifier.certify(h)


def verify_certificate(certifier: DegreeBoundCertifier, cert: MembershipCertificate) -> bool:
    return certifier.verify(cert)


# multiplication maps ----------------------------------------------------------

class SurjectivityStatus(str, enum.Enum):
    SURJECTIVE = "Surjective"
    NOT_SURJECTIVE = "NotSurjective"
    EMPTY_SOURCE = "EmptySource"


@dataclass
class SurjectivityResult:
    status: SurjectivityStatus
    rank: int
    corank: int
    source_dims: tuple[int, int]
    target_dim: int
    k: int
    middle_degree_context: bool
    certified: bool = True

    def as_dict(self) -> dict:
        return {"status": self.status.value, "rank": self.rank, "corank": self.corank,
                "source_dims": list(self.source_dims), "target_dim": self.target_dim,
                "k": self.k, "middle_degree_context": self.middle_degree_context,
                "certified": self.certified}


def multiplication_surjectivity(model: AmbientModel, k: int, *,
                                method: str = "auto") -> SurjectivityResult:
    """Rank of ``H^0(L) x H^0(K + kL) -> H^0(K + (k+1)L)``.

    ``middle_degree_context`` records whether ``n = 2k + 1``, the case in
    which surjectivity feeds the Noether-Lefschetz type argument.
    """
    if isinstance(model, TorusHypersurface):
        raise PreconditionError("multiplication maps are defined here for G/P models only")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    ctx = model.dim == 2 * k + 1
    e_src = model.m_degree(k - 1) if k >= 1 else None
    e_tgt = model.m_degree(k)
    sections = model.space(model.section_degree(1))
    tdim = model.space(e_tgt).dim if e_tgt is not None else 0
    if e_src is None or model.space(e_src).dim == 0:
        return SurjectivityResult(SurjectivityStatus.EMPTY_SOURCE, 0, tdim,
                                  (sections.dim, 0), tdim, k, ctx)
    source = model.space(e_src)
    target = model.space(e_tgt)
    system = product_rows(sections.basis_polys(), source, target).dedupe()
    res = system_rank(system, method)
    status = (SurjectivityStatus.SURJECTIVE if res.rank == target.dim
              else SurjectivityStatus.NOT_SURJECTIVE)
    return SurjectivityResult(status, res.rank, target.dim - res.rank,
                              (sections.dim, source.dim), target.dim, k, ctx, res.certified)


__all__ = [
    "DegreeBoundCertifier",
    "MembershipCertificate",
    "RankCheckResult",
    "SurjectivityResult",
    "SurjectivityStatus",
    "degree_bound_certificate",
    "expected_total",
    "multiplication_surjectivity",
    "rank_check_cy",
    "verify_certificate",
]
