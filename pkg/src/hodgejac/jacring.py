"""Generalized Jacobian rings and the graded pieces of ``M / J M``.

For a section ``f`` of ``L`` the ideal ``J`` is generated by ``f`` and its
Lie derivatives along the infinitesimal symmetries of the ambient space.
The dimension of ``(M/JM)^k`` is ``dim M^k`` minus the rank of the span of
``g * m`` with ``g`` a generator and ``m`` a basis element of ``M^{k-1}``
(``J M^{-1} = 0``).  Under the vanishing hypotheses checked by
:mod:`hodgejac.vanishing` these numbers are the Hodge-graded pieces of the
middle cohomology of the complement ``U`` of the hypersurface.
"""
from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .ambient import AmbientModel, Grassmannian, ProjectiveSpace, TorusHypersurface
from .assembly import product_rows, system_rank
from .errors import DegenerateInputError, PreconditionError
from .poly import MultiPoly, format_poly
from .vanishing import Status, VanishingVerdict, main_hypotheses

log = logging.getLogger(__name__)


class Smoothness(str, enum.Enum):
    CERTIFIED = "Certified"
    ASSUMED_GENERIC = "AssumedGeneric"
    FAILED = "Failed"


@dataclass(frozen=True)
class SmoothnessResult:
    status: Smoothness
    method: str
    degree: int | None = None

    def as_dict(self) -> dict:
        return {"status": self.status.value, "method": self.method, "degree": self.degree}


def macaulay_degree(n: int, d: int) -> int:
    """Degree in which the partials of a smooth degree-``d`` form in
    ``n + 1`` variables span everything: ``(n+1)(d-2)+1``."""
    return (n + 1) * (d - 2) + 1


def smoothness_certificate(model: AmbientModel, f: MultiPoly,
                           method: str = "auto") -> SmoothnessResult:
    """Certify that ``f = 0`` is smooth (projective space only).

    On ``P^n`` the hypersurface is smooth exactly when the partial
    derivatives have no common projective zero, i.e. when they span all
    forms of degree ``(n+1)(d-2)+1``.  A full rank modulo a prime proves
    this; a deficient rank modulo two primes is reported as ``Failed``.
    Other models return ``AssumedGeneric``.
    """
    if not isinstance(model, ProjectiveSpace):
        log.warning("smoothness is assumed, not certified, for %s models", model.kind)
        return SmoothnessResult(Smoothness.ASSUMED_GENERIC, "not implemented for this model")
    f = model.prepare_section(f)
    n, d = model.n, model.d
    if d == 1:
        return SmoothnessResult(Smoothness.CERTIFIED, "hyperplane", 0)
    D = macaulay_degree(n, d)
    partials = [f.derivative(i) for i in range(model.nvars)]
    target = model.space(D)
    source = model.space(D - d + 1)
    system = product_rows(partials, source, target).dedupe()
    res = system_rank(system, method)
    if res.rank == target.dim:
        return SmoothnessResult(Smoothness.CERTIFIED, f"partials span degree {D} ({res.method})", D)
    return SmoothnessResult(Smoothness.FAILED,
                            f"partials miss {target.dim - res.rank} dimensions in degree {D} "
                            f"({res.method})", D)


@dataclass
class DegreeEntry:
    k: int
    dim: int
    hodge_label: str
    space_dim: int
    rank: int
    rows: int
    method: str
    certified: bool
    hypotheses: str = "not-applicable"


@dataclass
class GradedReport:
    model: dict
    section: str
    generators: list[str]
    smoothness: dict
    per_degree: list[DegreeEntry]
    certified_hypotheses: list[dict] = field(default_factory=list)
    grading: str = "M"

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(e.dim for e in self.per_degree)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def conditional(self) -> bool:
        return any(e.hypotheses in ("conditional", "hypothesis-fails") for e in self.per_degree)

    def as_dict(self) -> dict:
        return {
            "model": self.model,
            "grading": self.grading,
            "section": self.section,
            "generators": self.generators,
            "smoothness": self.smoothness,
            "per_degree": [asdict(e) for e in self.per_degree],
            "dims": list(self.dims),
            "total": self.total,
            "conditional": self.conditional,
            "certified_hypotheses": self.certified_hypotheses,
        }


def _hypothesis_status(verdicts: list[VanishingVerdict]) -> str:
    if any(v.status is Status.NON_VANISHING for v in verdicts):
        return "hypothesis-fails"
    if any(v.status is Status.INCONCLUSIVE for v in verdicts):
        return "conditional"
    return "certified"


def quotient_entry(model: AmbientModel, gens: list[MultiPoly], k: int, *,
                   method: str = "auto", vanishing_degree: int | None = None) -> DegreeEntry:
    """Dimension of ``(M/JM)^k`` (for the torus: ``(R/J)^k``)."""
    torus = isinstance(model, TorusHypersurface)
    label = model.hodge_label(k)
    if torus:
        e = k
        src_e = k - 1 if k >= 1 else None
    else:
        e = model.m_degree(k)
        src_e = model.m_degree(k - 1) if k >= 1 else None
    if e is None:
        return DegreeEntry(k, 0, label, 0, 0, 0, "empty", True)
    target = model.space(e)
    if k == 0 or (src_e is None and not torus):
        return DegreeEntry(k, target.dim, label, target.dim, 0, 0, "no relations", True)
    if torus and k == 0:
        return DegreeEntry(k, 1, label, 1, 0, 0, "no relations", True)
    if vanishing_degree is not None and e >= vanishing_degree:
        return DegreeEntry(k, 0, label, target.dim, target.dim, 0,
                           f"propagated from smoothness certificate (degree {vanishing_degree})",
                           True)
    source = model.space(src_e)
    system = product_rows(gens, source, target).dedupe()
    res = system_rank(system, method)
    return DegreeEntry(k, target.dim - res.rank, label, target.dim, res.rank, system.nrows,
                       res.method, res.certified)


def _entry_job(args):
    model, gens, k, method, vdeg = args
    return quotient_entry(model, gens, k, method=method, vanishing_degree=vdeg)


def jacobian_graded_dims(model: AmbientModel, f: MultiPoly, k_max: int | None = None, *,
                         method: str = "auto", check_smoothness: bool = True,
                         allow_singular: bool = False, check_hypotheses: bool = True,
                         jobs: int = 1) -> GradedReport:
    """Graded dimensions of ``M / J M`` for a section ``f`` of ``L``.

    Parameters
    ----------
    model : AmbientModel
    f : MultiPoly
        A section of ``L`` (degree one in the ring grading).
    k_max : int, optional
        Last degree computed; defaults to ``n - 1`` (``n`` for the torus,
        whose report is graded by the ring ``R`` and starts at ``R^0``).
    method : {"auto", "exact", "modular"}
        Rank computation; see :func:`hodgejac.assembly.system_rank`.
    check_smoothness : bool
        Run :func:`smoothness_certificate` first.
    allow_singular : bool
        Continue even if the certificate fails (the report records it).
    jobs : int
        Worker processes for independent degrees; output is identical.

    Raises
    ------
    DegenerateInputError
        When the smoothness certificate fails and ``allow_singular`` is off.
    """
    f = model.prepare_section(f)
    torus = isinstance(model, TorusHypersurface)
    if k_max is None:
        k_max = model.dim if torus else model.dim - 1
    if k_max < 0:
        raise PreconditionError("k_max must be non-negative")
    if check_smoothness:
        smooth = smoothness_certificate(model, f, method)
    else:
        smooth = SmoothnessResult(Smoothness.ASSUMED_GENERIC, "check skipped by caller")
    if smooth.status is Smoothness.FAILED and not allow_singular:
        raise DegenerateInputError(f"section is singular: {smooth.method}")
    vdeg = None
    if isinstance(model, ProjectiveSpace) and smooth.status is Smoothness.CERTIFIED:
        vdeg = max(smooth.degree, model.d)
    gens = model.lie_derivative_generators(f)
    tasks = [(model, gens, k, method, vdeg) for k in range(k_max + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            entries = list(ex.map(_entry_job, tasks))
    else:
        entries = [_entry_job(t) for t in tasks]
    hyps: list[dict] = []
    if check_hypotheses:
        hyps = _attach_hypotheses(model, entries)
    return GradedReport(
        model=model.describe(),
        section=format_poly(model.to_laurent(f) if torus else f),
        generators=[format_poly(g) for g in gens],
        smoothness=smooth.as_dict(),
        per_degree=entries,
        certified_hypotheses=hyps,
        grading="R" if torus else "M",
    )


def _attach_hypotheses(model: AmbientModel, entries: list[DegreeEntry]) -> list[dict]:
    if isinstance(model, TorusHypersurface):
        for e in entries:
            e.hypotheses = "certified"
        return [VanishingVerdict(Status.VANISHES, "theorem-citation", "Clog/C1log",
                                 note="the torus is log parallelizable").summary()]
    data = model.homogeneous_data()
    if data is None:
        return []
    rs, par, L = data
    out = []
    for e in entries:
        if e.k > model.dim - 1:
            e.hypotheses = "outside-theorem-range"
            continue
        verdicts = main_hypotheses(rs, par, L, model.dim, e.k)
        e.hypotheses = _hypothesis_status(verdicts)
        for v in verdicts:
            s = v.summary()
            s.pop("witness", None)
            s["k"] = e.k
            out.append(s)
    return out


def random_section(model: AmbientModel, seed: int, coeff_bound: int = 10) -> MultiPoly:
    """Deterministic pseudo-random section (see :meth:`AmbientModel.random_section`)."""
    return model.random_section(seed, coeff_bound)


def sections_basis(model: AmbientModel, k: int) -> list[MultiPoly]:
    return model.sections_basis(k)


def m_basis(model: AmbientModel, k: int) -> list[MultiPoly]:
    return model.m_basis(k)


def lie_derivative_generators(model: AmbientModel, f: MultiPoly) -> list[MultiPoly]:
    return model.lie_derivative_generators(f)


def generic_section(model: AmbientModel, seed: int, coeff_bound: int = 10,
                    attempts: int = 20) -> tuple[MultiPoly, int]:
    """First seed ``>= seed`` whose random section passes the smoothness
    certificate (or is assumed generic); returns ``(section, seed used)``."""
    for s in range(seed, seed + attempts):
        f = model.random_section(s, coeff_bound)
        if smoothness_certificate(model, f).status is not Smoothness.FAILED:
            if s != seed:
                log.info("seed %d gave a singular section; used seed %d", seed, s)
            return f, s
    raise DegenerateInputError(f"no smooth section among seeds {seed}..{seed + attempts - 1}")


__all__ = [
    "DegreeEntry",
    "GradedReport",
    "Grassmannian",
    "ProjectiveSpace",
    "Smoothness",
    "SmoothnessResult",
    "TorusHypersurface",
    "generic_section",
    "jacobian_graded_dims",
    "lie_derivative_generators",
    "m_basis",
    "macaulay_degree",
    "random_section",
    "sections_basis",
    "smoothness_certificate",
]
