"""Sparse multivariate (Laurent) polynomials with rational coefficients.

The text format is one term per line::

    # Fermat cubic
    1 3,0,0
    1 0,3,0
    1/2 0,0,3

A term is a coefficient (integer or ``p/q``) followed by a comma separated
exponent vector.  When the caller supplies variable names, a term may also be
written as a product such as ``-2 p12*p34^2``; a bare coefficient is a
constant term.  Terms with equal exponents are added.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from itertools import combinations_with_replacement

Monomial = tuple[int, ...]


class PolyParseError(ValueError):
    """Malformed polynomial text; the message carries the line number."""


class MultiPoly:
    """Polynomial as a map from exponent tuples to nonzero ``Fraction``.

    Parameters
    ----------
    nvars : int
        Number of variables (arity of every exponent vector).
    terms : mapping, optional
        Exponent tuple to coefficient; zero coefficients are dropped.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has arity {len(e)}, expected {nvars}")
                c = Fraction(c)
                if c:
                    self.terms[e] = self.terms.get(e, 0) + c
                    if not self.terms[e]:
                        del self.terms[e]

    # construction -----------------------------------------------------
    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Fraction | int = 1) -> "MultiPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def constant(cls, nvars: int, c: Fraction | int = 1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def copy(self) -> "MultiPoly":
        new = MultiPoly(self.nvars)
        new.terms = dict(self.terms)
        return new

    # queries ------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: term_order_key(t[0])))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def degree(self) -> int:
        """Total degree of the top term (``-1`` for the zero polynomial)."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, exps: Monomial) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other) if other else not self.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {len(self.terms)} terms)"

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = self.copy()
        for e, c in other.terms.items():
            v = out.terms.get(e, 0) + c
            if v:
                out.terms[e] = v
            else:
                out.terms.pop(e, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Fraction | int) -> "MultiPoly":
        c = Fraction(c)
        out = MultiPoly(self.nvars)
        if c:
            out.terms = {e: v * c for e, v in self.terms.items()}
        return out

    def shift(self, exps: Monomial, c: Fraction | int = 1) -> "MultiPoly":
        """Multiply by the monomial ``c * x**exps``."""
        c = Fraction(c)
        out = MultiPoly(self.nvars)
        if c:
            out.terms = {tuple(a + b for a, b in zip(e, exps)): v * c
                         for e, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        res = MultiPoly(self.nvars)
        res.terms = out
        return res

    __rmul__ = __mul__

    def derivative(self, i: int) -> "MultiPoly":
        out = MultiPoly(self.nvars)
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out.terms[tuple(ne)] = c * e[i]
        return out

    def euler(self, i: int) -> "MultiPoly":
        """The logarithmic derivative ``x_i d/dx_i`` (Laurent-safe)."""
        out = MultiPoly(self.nvars)
        out.terms = {e: c * e[i] for e, c in self.terms.items() if e[i]}
        return out

    def polarize(self, j: int, i: int) -> "MultiPoly":
        """``x_j d/dx_i`` applied to ``self``."""
        out = MultiPoly(self.nvars)
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                ne[j] += 1
                ne = tuple(ne)
                v = out.terms.get(ne, 0) + c * e[i]
                if v:
                    out.terms[ne] = v
                else:
                    out.terms.pop(ne, None)
        return out

    def evaluate(self, point: Iterable[Fraction | int]) -> Fraction:
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                t *= x ** k
            total += t
        return total

    def to_text(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)


def term_order_key(e: Monomial) -> tuple:
    """Sort key for graded lexicographic order, largest monomial first."""
    return (-sum(e), tuple(-x for x in e))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree, largest first.

    >>> monomials_of_degree(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=term_order_key)
    return out


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: MultiPoly) -> str:
    """Canonical text form: one term per line in graded lexicographic order."""
    lines = [f"{format_coefficient(c)} {','.join(map(str, e))}" for e, c in f]
    return "\n".join(lines) + ("\n" if lines else "")


_COEFF = re.compile(r"^[+-]?\d+(/\d+)?$")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def _parse_coefficient(tok: str, lineno: int) -> Fraction:
    if not _COEFF.match(tok):
        raise PolyParseError(f"line {lineno}: bad coefficient {tok!r}")
    c = Fraction(tok)
    return c


def parse_poly(text: str, nvars: int | None = None,
               names: Mapping[str, tuple[int, int]] | None = None) -> MultiPoly:
    """Parse the term-per-line polynomial format.

    Parameters
    ----------
    text : str
        Polynomial text; ``#`` starts a comment.
    nvars : int, optional
        Expected arity.  Inferred from the first term when omitted.
    names : mapping, optional
        Variable name to ``(index, sign)``; enables the product syntax.  The
        sign lets alternating names such as ``p21`` stand for ``-p12``.

    Raises
    ------
    PolyParseError
        On any malformed line, with its 1-based line number.
    """
    terms: list[tuple[Monomial, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        coeff = _parse_coefficient(parts[0], lineno)
        rest = "".join(parts[1:])
        if names is not None and (not rest or not rest[0].isdigit() and rest[0] != "-"):
            if nvars is None:
                raise PolyParseError(f"line {lineno}: named variables need a known arity")
            e = [0] * nvars
            if rest:
                for factor in rest.split("*"):
                    m = _FACTOR.match(factor)
                    if not m or m.group(1) not in names:
                        raise PolyParseError(f"line {lineno}: unknown factor {factor!r}")
                    idx, sign = names[m.group(1)]
                    power = int(m.group(2) or 1)
                    e[idx] += power
                    if sign < 0 and power % 2:
                        coeff = -coeff
            exps = tuple(e)
        else:
            if len(parts) != 2:
                raise PolyParseError(f"line {lineno}: expected 'coefficient exponents'")
            try:
                exps = tuple(int(x) for x in parts[1].split(","))
            except ValueError:
                raise PolyParseError(f"line {lineno}: bad exponent vector {parts[1]!r}") from None
        if nvars is None:
            nvars = len(exps)
        if len(exps) != nvars:
            raise PolyParseError(
                f"line {lineno}: exponent vector has {len(exps)} entries, expected {nvars}")
        terms.append((exps, coeff))
    if nvars is None:
        raise PolyParseError("empty polynomial text needs an explicit arity")
    acc: dict[Monomial, Fraction] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    return MultiPoly(nvars, acc)
