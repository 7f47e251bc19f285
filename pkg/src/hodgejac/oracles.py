"""Independent reference values used to cross-check the main pipeline.

Nothing here touches the row-reduction machinery: every number comes from
closed formulas or elementary counting.

* :func:`fermat_jacobian_dims` counts the monomial basis of the Jacobian
  ring of a Fermat hypersurface, whose Jacobian ideal is monomial.
* :func:`ci_euler_characteristic` expands the Chern polynomial of a
  complete intersection in ``P^N``.
* :func:`koszul_euler_characteristic` computes ``chi(O_Y(m))`` from the
  Koszul resolution.
* :func:`complement_middle_betti` assembles ``dim H^n(X - Y)`` from Betti
  numbers through the Gysin sequence and the Lefschetz theorem.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, prod


@lru_cache(maxsize=None)
def bounded_monomial_count(nvars: int, degree: int, cap: int) -> int:
    """Number of monomials of ``degree`` in ``nvars`` variables with every
    exponent at most ``cap`` (inclusion-exclusion)."""
    if degree < 0 or cap < 0:
        return 0
    total = 0
    for j in range(nvars + 1):
        rest = degree - j * (cap + 1)
        if rest < 0:
            break
        total += (-1) ** j * comb(nvars, j) * comb(rest + nvars - 1, nvars - 1)
    return total


def fermat_jacobian_dims(n: int, d: int, k_max: int | None = None) -> tuple[int, ...]:
    """Graded pieces of ``M / J M`` for the Fermat hypersurface of degree
    ``d`` in ``P^n``.

    The Jacobian ideal of ``sum x_i^d`` is ``(x_0^{d-1}, ..., x_n^{d-1})``,
    so the quotient in degree ``e`` is spanned by the monomials with all
    exponents at most ``d - 2``; piece ``k`` sits in degree
    ``(k + 1) d - n - 1``.
    """
    if k_max is None:
        k_max = n - 1
    return tuple(bounded_monomial_count(n + 1, (k + 1) * d - n - 1, d - 2)
                 for k in range(k_max + 1))


def _series_coefficients(numer: Sequence[int], denom_roots: Sequence[int], N: int) -> list[Fraction]:
    """Coefficients up to ``h^N`` of ``prod(1 + h)^... / prod(1 + d h)``.

    ``numer`` lists the polynomial coefficients of the numerator.
    """
    c = [Fraction(v) for v in numer[:N + 1]] + [Fraction(0)] * max(0, N + 1 - len(numer))
    for d in denom_roots:
        # divide by (1 + d h)
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            out[i] = c[i] - (d * out[i - 1] if i else 0)
        c = out
    return c


def ci_euler_characteristic(N: int, degrees: Sequence[int]) -> int:
    """Topological Euler characteristic of a smooth complete intersection
    of the given degrees in ``P^N``.

    ``c(T_Y) = (1 + h)^{N+1} / prod(1 + d_i h)`` and
    ``chi = deg(Y) * [h^{dim Y}] c(T_Y)``.
    """
    m = N - len(degrees)
    if m < 0:
        raise ValueError("more equations than the ambient dimension")
    numer = [comb(N + 1, i) for i in range(N + 2)]
    series = _series_coefficients(numer, degrees, m)
    value = series[m] * prod(degrees)
    assert value.denominator == 1
    return int(value)


def ci_betti_numbers(N: int, degrees: Sequence[int]) -> list[int]:
    """Betti numbers ``b_0..b_{2m}`` of a smooth complete intersection.

    Outside the middle degree they agree with ``P^m`` (Lefschetz and
    Poincaré duality); the middle one follows from the Euler characteristic.
    """
    m = N - len(degrees)
    b = [1 if i % 2 == 0 else 0 for i in range(2 * m + 1)]
    b[m] = 0
    b[m] = (-1) ** m * (ci_euler_characteristic(N, degrees) - sum((-1) ** i * x for i, x in enumerate(b)))
    return b


def ci_primitive_middle_betti(N: int, degrees: Sequence[int]) -> int:
    """Middle Betti number minus the part restricted from ``P^N``."""
    m = N - len(degrees)
    return ci_betti_numbers(N, degrees)[m] - (1 if m % 2 == 0 else 0)


def _chi_pn(n: int, m: int) -> int:
    """``chi(O_{P^n}(m))`` as the Hilbert polynomial (valid for all ``m``)."""
    num = 1
    for i in range(1, n + 1):
        num *= m + i
    den = 1
    for i in range(1, n + 1):
        den *= i
    return num // den


def koszul_euler_characteristic(n: int, degrees: Sequence[int], m: int = 0) -> int:
    """``chi(O_Y(m))`` for a complete intersection in ``P^n`` via the
    Koszul resolution ``... -> sum O(m - d_S) -> O(m) -> O_Y(m)``."""
    total = 0
    for j in range(len(degrees) + 1):
        for S in combinations(degrees, j):
            total += (-1) ** j * _chi_pn(n, m - sum(S))
    return total


def curve_genus(n: int, degrees: Sequence[int]) -> int:
    """Genus of a complete intersection curve, ``1 - chi(O_Y)``."""
    if n - len(degrees) != 1:
        raise ValueError("not a curve")
    return 1 - koszul_euler_characteristic(n, degrees)


@lru_cache(maxsize=None)
def grassmannian_betti(a: int, b: int) -> tuple[int, ...]:
    """Betti numbers of ``G(a, b)``: partitions in an ``a x (b - a)`` box,
    counted by size; odd degrees vanish."""
    c = b - a
    # number of partitions of each size fitting in the box (Gaussian binomial)
    counts = [0] * (a * c + 1)

    def rec(parts_left: int, max_part: int, size: int):
        if parts_left == 0:
            counts[size] += 1
            return
        for p in range(max_part + 1):
            rec(parts_left - 1, p, size + p)

    rec(a, c, 0)
    out = []
    for s in counts:
        out.extend([s, 0])
    return tuple(out[:-1])


def projective_betti(n: int) -> tuple[int, ...]:
    return tuple(1 if i % 2 == 0 else 0 for i in range(2 * n + 1))


def complement_middle_betti(ambient_betti: Sequence[int], hypersurface_betti: Sequence[int]) -> int:
    """``dim H^n(X - Y)`` for a smooth ample hypersurface ``Y`` in ``X``.

    From the Gysin sequence, with the Gysin map ``H^{n-2}(Y) -> H^n(X)``
    injective and ``H^{n-1}(Y) -> H^{n+1}(X)`` surjective:

        h^n(U) = b_{n-1}(Y) - b_{n+1}(X) + b_n(X) - b_{n-2}(X).
    """
    n = (len(ambient_betti) - 1) // 2
    bX = list(ambient_betti)
    bY = list(hypersurface_betti)
    get = lambda v, i: v[i] if 0 <= i < len(v) else 0
    return get(bY, n - 1) - get(bX, n + 1) + get(bX, n) - get(bX, n - 2)


def ambient_middle_classes(ambient_betti: Sequence[int]) -> int:
    """Classes of ``H^n(U)`` coming from ``H^n(X)`` itself: ``b_n - b_{n-2}``.

    On the homogeneous spaces used here they are all of type ``(n/2, n/2)``.
    """
    n = (len(ambient_betti) - 1) // 2
    b = list(ambient_betti)
    return b[n] - (b[n - 2] if n >= 2 else 0)


def expected_complement_total(kind: str, **data) -> int:
    """Reference ``dim H^n(X - Y)`` for the Calabi-Yau models.

    ``kind="projective"`` with ``n`` (``d = n + 1``) uses the Fermat count;
    ``kind="grassmannian"`` with ``a, b`` uses the Plücker embedding
    (``G(2,4)`` is a quadric in ``P^5``) and the Chern class formula.
    """
    if kind == "projective":
        n = data["n"]
        return sum(fermat_jacobian_dims(n, n + 1))
    if kind == "grassmannian":
        a, b = data["a"], data["b"]
        if (a, b) not in ((2, 4),):
            raise ValueError("only G(2,4) is a complete intersection in its Plücker space")
        # Y = G(2,4) cap quartic = (2, 4) in P^5
        bY = ci_betti_numbers(5, (2, 4))
        return complement_middle_betti(grassmannian_betti(2, 4), bY)
    raise ValueError(f"no reference value for {kind!r}")


__all__ = [
    "ambient_middle_classes",
    "bounded_monomial_count",
    "ci_betti_numbers",
    "ci_euler_characteristic",
    "ci_primitive_middle_betti",
    "complement_middle_betti",
    "curve_genus",
    "expected_complement_total",
    "fermat_jacobian_dims",
    "grassmannian_betti",
    "koszul_euler_characteristic",
    "projective_betti",
]
