"""Checkers for the cohomology vanishing hypotheses of the Jacobian ring
theorems, with three-valued answers.

Each check returns a :class:`VanishingVerdict` whose ``method`` records how
it was decided:

``closed-formula``
    Bott's formula for twisted differential forms on projective space, or
    the Euler sequence for the adjoint bundle of ``P`` on projective space.
``filtration-bound``
    Every line-bundle factor of a filtration vanishes in the relevant degree
    (``Vanishes``), or the factors contribute to a single degree only, so the
    bound is exact (``NonVanishing``).
``theorem-citation``
    A published criterion that applies to the input.
"""
from __future__ import annotations

import enum
import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from .bwb import CohomologyBound, filtered_cohomology_bound, wedge_cotangent_weights, weights_of_p
from .errors import PreconditionError
from .rootsys import Parabolic, RootSystem, build_root_system, check_weight, two_rho_P

log = logging.getLogger(__name__)


class Status(str, enum.Enum):
    VANISHES = "Vanishes"
    NON_VANISHING = "NonVanishing"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class VanishingVerdict:
    status: Status
    method: str
    condition: str
    witness: object = field(default=None, compare=False)
    note: str = ""

    @property
    def vanishes(self) -> bool:
        return self.status is Status.VANISHES

    def summary(self) -> dict:
        out = {"condition": self.condition, "status": self.status.value, "method": self.method}
        if self.note:
            out["note"] = self.note
        w = self.witness
        if isinstance(w, CohomologyBound):
            out["witness"] = w.as_dict()
        elif isinstance(w, dict):
            out["witness"] = {str(k): v for k, v in w.items()}
        return out


# ---------------------------------------------------------------------------
# recognising the homogeneous space

def projective_space(n: int) -> tuple[RootSystem, Parabolic]:
    """``P^n = SL(n+1)/P_1``; ``O(d)`` has weight ``d * omega_1``."""
    return build_root_system("A", n), Parabolic([1])


def grassmannian(a: int, b: int) -> tuple[RootSystem, Parabolic]:
    """``G(a, b) = SL(b)/P_a``; ``O(t)`` has weight ``t * omega_a``."""
    if not 1 <= a < b:
        raise PreconditionError(f"G({a},{b}) needs 1 <= a < b")
    return build_root_system("A", b - 1), Parabolic([a])


def _single_removed(parabolic: Parabolic) -> int | None:
    return next(iter(parabolic.removed)) if len(parabolic.removed) == 1 else None


def as_projective_space(rs: RootSystem, parabolic: Parabolic) -> int | None:
    """Dimension ``n`` if ``G/P`` is ``P^n`` presented by ``A_n``."""
    j = _single_removed(parabolic)
    if rs.type_letter == "A" and j in (1, rs.rank):
        return rs.rank
    return None


def as_grassmannian(rs: RootSystem, parabolic: Parabolic) -> tuple[int, int] | None:
    j = _single_removed(parabolic)
    if rs.type_letter == "A" and j is not None:
        return j, rs.rank + 1
    return None


def is_irreducible_hermitian_symmetric(rs: RootSystem, parabolic: Parabolic) -> bool:
    """Whether ``G/P`` is an irreducible compact Hermitian symmetric space
    (``P`` maximal for a cominuscule simple root)."""
    j = _single_removed(parabolic)
    if j is None:
        return False
    n, t = rs.rank, rs.type_letter
    return ((t == "A") or (t == "B" and j == 1) or (t == "C" and j == n)
            or (t == "D" and j in (1, n - 1, n)) or (t == "E" and n == 6 and j in (1, 6))
            or (t == "E" and n == 7 and j == 7))


def _line_bundle_weight(rs: RootSystem, parabolic: Parabolic, L_weight) -> tuple[int, ...]:
    L = check_weight(rs, L_weight)
    parabolic.validate(rs)
    bad = [i + 1 for i in range(rs.rank) if L[i] and (i + 1) not in parabolic.removed]
    if bad:
        raise PreconditionError(
            f"weight {L} is not a line bundle on G/P: nonzero on Levi roots {bad}")
    return L


def _is_ample(parabolic: Parabolic, L: Sequence[int]) -> bool:
    return all(L[i - 1] > 0 for i in parabolic.removed)


def _degree_on_maximal(parabolic: Parabolic, L: Sequence[int]) -> int:
    j = _single_removed(parabolic)
    return L[j - 1]


# ---------------------------------------------------------------------------
# closed formulas on projective space

def bott_projective(n: int, q: int, m: int) -> dict[int, int]:
    """Nonzero ``h^p(P^n, Omega^q(m))`` by Bott's formula.

    >>> bott_projective(2, 1, 0)
    {1: 1}
    >>> bott_projective(1, 1, 0)
    {1: 1}
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= q <= n:
        return {}
    out: dict[int, int] = {}
    if m > q:
        out[0] = comb(m + n - q, m) * comb(m - 1, q)
    elif m == 0 and q == 0:
        out[0] = 1
    if m == 0 and 0 < q < n:
        out[q] = 1
    if m < q - n:
        out[n] = out.get(n, 0) + comb(-m + q, -m) * comb(-m - 1, n - q)
    elif m == 0 and q == n:
        out[n] = out.get(n, 0) + 1
    return {p: d for p, d in out.items() if d}


def adjoint_h1_projective(n: int, m: int) -> int:
    """``h^1`` of the adjoint bundle of ``P`` on ``P^n`` twisted by ``O(m)``.

    From ``0 -> p -> g (x) O -> T -> 0``: the twisted ``H^1`` is the cokernel
    of ``g (x) H^0(O(m)) -> H^0(T(m))`` (plus ``H^1(O(m))`` terms that vanish
    in the range used).  The cokernel is zero for ``m >= 0`` and for
    ``m <= -2``; for ``m = -1`` it is ``H^0(T(-1)) = C^{n+1}``.
    """
    if m == -1:
        return n + 1
    if n == 1 and m <= -2:
        # H^1(g (x) O(m)) no longer vanishes; not needed for ample twists
        raise NotImplementedError("P^1 with m <= -2")
    return 0


# ---------------------------------------------------------------------------
# condition C

def _filtration_verdict(bound: CohomologyBound, degree: int, condition: str) -> VanishingVerdict:
    if bound.upper(degree) == 0:
        return VanishingVerdict(Status.VANISHES, "filtration-bound", condition, bound)
    if bound.exact:
        return VanishingVerdict(Status.NON_VANISHING, "filtration-bound", condition, bound)
    return VanishingVerdict(Status.INCONCLUSIVE, "filtration-bound", condition, bound,
                            "factors contribute to several degrees")


def check_C(rs: RootSystem, parabolic: Parabolic, L_weight, p: int, q: int, l: int,
            *, use_theorems: bool = True) -> VanishingVerdict:
    """Decide ``H^p(X, Omega^q (x) L^l) = 0`` for ``X = G/P``.

    Parameters
    ----------
    p, q, l : int
        ``p > 0``, ``q >= 0``, ``l >= 1``.
    use_theorems : bool
        Allow closed formulas and published criteria; when false only the
        filtration bound is used.
    """
    if p <= 0 or q < 0 or l < 1:
        raise PreconditionError(f"condition C needs p>0, q>=0, l>=1 (got {p},{q},{l})")
    L = _line_bundle_weight(rs, parabolic, L_weight)
    cond = f"C(p={p},q={q},l={l})"
    n_proj = as_projective_space(rs, parabolic)
    if use_theorems and n_proj is not None:
        m = l * _degree_on_maximal(parabolic, L)
        h = bott_projective(n_proj, q, m)
        st = Status.NON_VANISHING if h.get(p) else Status.VANISHES
        return VanishingVerdict(st, "closed-formula", cond, h, f"Bott formula, Omega^{q}({m})")
    dimX = len([c for c in rs.positive_roots if not parabolic.in_levi(c)])
    if q > dimX:
        return VanishingVerdict(Status.VANISHES, "filtration-bound", cond, None,
                                "Omega^q = 0 for q > dim X")
    twist = tuple(l * x for x in L)
    bound = filtered_cohomology_bound(rs, wedge_cotangent_weights(rs, parabolic, q), twist)
    verdict = _filtration_verdict(bound, p, cond)
    if verdict.status is not Status.INCONCLUSIVE or not use_theorems:
        return verdict
    grass = as_grassmannian(rs, parabolic)
    if grass is not None:
        a, b = grass
        t = _degree_on_maximal(parabolic, L)
        if t >= b - 1:
            return VanishingVerdict(Status.VANISHES, "theorem-citation", cond, bound,
                                    f"Snow: G({a},{b}) with O(t), t={t} >= {b - 1}")
        if b == 2 * a and t * l == 2 and p == (a * a - a) // 2 and q == dimX - p:
            return VanishingVerdict(Status.NON_VANISHING, "theorem-citation", cond, bound,
                                    f"Snow: H^p(G({a},{b}), Omega^(n-p)(2)) != 0 for p=(a^2-a)/2")
    return verdict


# ---------------------------------------------------------------------------
# condition C1

def _exceptional_automorphisms(rs: RootSystem, parabolic: Parabolic) -> bool:
    """``G/P`` whose automorphism algebra is larger than ``g``."""
    j = _single_removed(parabolic)
    t, n = rs.type_letter, rs.rank
    return (t == "C" and j == 1) or (t == "B" and j == n) or (t == "G" and j == 1)


def check_C1(rs: RootSystem, parabolic: Parabolic, L_weight, k: int,
             *, use_theorems: bool = True) -> VanishingVerdict:
    """Decide ``H^1(X, (G x_P p) (x) L^k (x) K_X) = 0``."""
    if k < 1:
        raise PreconditionError(f"condition C1 needs k >= 1 (got {k})")
    L = _line_bundle_weight(rs, parabolic, L_weight)
    cond = f"C1(k={k})"
    K = two_rho_P(rs, parabolic)
    n_proj = as_projective_space(rs, parabolic)
    if use_theorems and n_proj is not None:
        d = _degree_on_maximal(parabolic, L)
        m = k * d - (n_proj + 1)
        h1 = adjoint_h1_projective(n_proj, m)
        st = Status.NON_VANISHING if h1 else Status.VANISHES
        return VanishingVerdict(st, "closed-formula", cond, {1: h1} if h1 else {},
                                f"Euler sequence, twist O({m}); fails exactly when kd = n")
    twist = tuple(k * x - y for x, y in zip(L, K))
    bound = filtered_cohomology_bound(rs, weights_of_p(rs, parabolic), twist)
    verdict = _filtration_verdict(bound, 1, cond)
    if verdict.status is Status.VANISHES or not use_theorems:
        return verdict
    if tuple(L) == tuple(K):
        if k >= 2:
            return VanishingVerdict(Status.VANISHES, "theorem-citation", cond, bound,
                                    "anticanonical L: higher cohomology of p (x) L^(k-1) vanishes")
        if _exceptional_automorphisms(rs, parabolic):
            return VanishingVerdict(Status.NON_VANISHING, "theorem-citation", cond, bound,
                                    "H^0(T_X) is larger than g for this G/P")
        return VanishingVerdict(Status.VANISHES, "theorem-citation", cond, bound,
                                "k=1 anticanonical: equivalent to H^0(T_X) = g")
    if (is_irreducible_hermitian_symmetric(rs, parabolic)
            and as_projective_space(rs, parabolic) is None and _is_ample(parabolic, L)):
        return VanishingVerdict(Status.VANISHES, "theorem-citation", cond, bound,
                                "irreducible Hermitian symmetric, not projective space, L ample")
    return verdict


# ---------------------------------------------------------------------------
# range generators

def main_theorem_range(n: int, k: int) -> list[tuple[int, int, int]]:
    """Triples ``(p, q, l)`` for which condition C is required in degree ``k``."""
    s = {(p, n - p, k - p + 1) for p in range(1, k + 1)}
    s |= {(p, n - p - 1, k - p) for p in range(1, k)}
    s |= {(p, n - p, k - p) for p in range(1, k)}
    return sorted(s)


def main_hypotheses(rs: RootSystem, parabolic: Parabolic, L_weight, n: int,
                    k: int) -> list[VanishingVerdict]:
    """Verdicts for every hypothesis needed by the Jacobian description in degree ``k``."""
    out = [check_C(rs, parabolic, L_weight, p, q, l) for p, q, l in main_theorem_range(n, k)]
    if k >= 1:
        out.append(check_C1(rs, parabolic, L_weight, k))
    return out


# ---------------------------------------------------------------------------
# split bundles on projective space

def _check_split(rs: RootSystem, parabolic: Parabolic, degrees: Sequence[int]) -> int:
    n = as_projective_space(rs, parabolic)
    if n is None:
        raise PreconditionError("split-bundle conditions are implemented on projective space only")
    if not degrees:
        raise PreconditionError("E must have positive rank")
    if any(d <= 0 for d in degrees):
        raise PreconditionError(f"E = sum O(d_i) must be ample, got degrees {list(degrees)}")
    return n


def split_twists(degrees: Sequence[int], a: int, s: int) -> Counter:
    """Line-bundle degrees of ``wedge^a E (x) S^s E`` with multiplicity."""
    out: Counter = Counter()
    if a < 0 or s < 0 or a > len(degrees):
        return out
    for A in combinations(range(len(degrees)), a):
        base = sum(degrees[i] for i in A)
        for B in combinations_with_replacement(range(len(degrees)), s):
            out[base + sum(degrees[i] for i in B)] += 1
    return out


def _term_cohomology(n: int, degrees, p: int, qq: int, a: int, s: int) -> dict[int, int]:
    """``h^p`` of ``Omega^qq (x) wedge^a E (x) S^s E`` split by twist."""
    if not 0 <= qq <= n:
        return {}
    out = {}
    for m, mult in split_twists(degrees, a, s).items():
        h = bott_projective(n, qq, m).get(p, 0) * mult
        if h:
            out[m] = h
    return out


def check_CV2(rs: RootSystem, parabolic: Parabolic, degrees: Sequence[int], p: int, q: int,
              l: int, a: int | None = None, *, form: str = "either") -> VanishingVerdict:
    """Condition CV2 for ``E = sum O(d_i)`` on projective space.

    For each ``a`` (all ``0 <= a <= l-1`` when ``a`` is None) at least one of
    ``H^p(Omega^(q-a) (x) wedge^a E (x) S^(l-a) E)`` (form ``A``) and
    ``H^p(Omega^(q-a) (x) wedge^(a+1) E (x) S^(l-a-1) E)`` (form ``B``) must
    vanish.  ``form`` restricts the check to one of the two.
    """
    n = _check_split(rs, parabolic, degrees)
    if p <= 0 or q < 0:
        raise PreconditionError("CV2 needs p > 0 and q >= 0")
    if form not in ("either", "A", "B"):
        raise ValueError("form must be 'either', 'A' or 'B'")
    a_values = [a] if a is not None else list(range(0, l))
    cond = f"CV2(p={p},q={q},l={l}" + (f",a={a}" if a is not None else "") + \
        (f",form={form})" if form != "either" else ")")
    witness = {}
    for aa in a_values:
        A = _term_cohomology(n, degrees, p, q - aa, aa, l - aa)
        B = _term_cohomology(n, degrees, p, q - aa, aa + 1, l - aa - 1)
        ok = {"either": not A or not B, "A": not A, "B": not B}[form]
        if not ok:
            witness[f"a={aa}"] = {"A": A, "B": B}
    if witness:
        return VanishingVerdict(Status.NON_VANISHING, "closed-formula", cond, witness)
    return VanishingVerdict(Status.VANISHES, "closed-formula", cond)


def check_C1V(rs: RootSystem, parabolic: Parabolic, degrees: Sequence[int],
              k: int) -> VanishingVerdict:
    """``H^1(X, (G x_P p) (x) S^k E (x) det E (x) K_X) = 0`` on projective space."""
    n = _check_split(rs, parabolic, degrees)
    if k < 0:
        raise PreconditionError("C1V needs k >= 0")
    shift = sum(degrees) - (n + 1)
    witness = {}
    for m, mult in split_twists(degrees, 0, k).items():
        h = adjoint_h1_projective(n, m + shift) * mult
        if h:
            witness[m + shift] = h
    st = Status.NON_VANISHING if witness else Status.VANISHES
    return VanishingVerdict(st, "closed-formula", f"C1V(k={k})", witness)


def vjm_theorem_range(n: int, r: int, k: int) -> list[tuple[int, int, int]]:
    """Triples ``(p, q, l)`` for which CV2 is required for the Hodge index ``k``."""
    s = {(p, n + r - 1 - p, k + r - p) for p in range(1, k + r)}
    s |= {(p, n + r - p - 2, k + r - 1 - p) for p in range(1, k + r - 1)}
    s |= {(p, n + r - 1 - p, k + r - 1 - p) for p in range(1, k + r - 1)}
    return sorted(t for t in s if t[2] >= 1)


def vjm_hypotheses(n: int, degrees: Sequence[int], k: int) -> list[VanishingVerdict]:
    """Verdicts for the split-bundle Hodge description of ``H^{n-r-k,k}_var``.

    Covers the three CV2 ranges, the extra case ``p=1, q-a=n, a=r-2,
    l-a=k-r+2`` (form A only) and C1V in the exponent the argument uses,
    ``S^(k-1) E`` for ``k >= 1``.
    """
    rs, par = projective_space(n)
    r = len(degrees)
    out = [check_CV2(rs, par, degrees, p, q, l) for p, q, l in vjm_theorem_range(n, r, k)]
    out.append(check_CV2(rs, par, degrees, 1, n + r - 2, k, r - 2, form="A"))
    if k >= 1:
        out.append(check_C1V(rs, par, degrees, k - 1))
    return out
