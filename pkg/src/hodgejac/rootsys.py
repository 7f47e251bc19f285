"""Root systems, weights and the Weyl group action they support.

Conventions
-----------
* Simple roots are numbered as in Bourbaki's tables and indexed from 1 in
  every public argument that names a simple root (reflection words,
  parabolic subsets).  Weight vectors are ordinary 0-based tuples.
* ``cartan_matrix[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` is the
  simple root ``alpha_i`` written in the fundamental-weight basis.  For
  ``G2`` this gives ``[[2, -1], [-3, 2]]`` (``alpha_1`` short); ``B_n`` has
  ``alpha_n`` short and ``C_n`` has ``alpha_n`` long.
* A weight ``lam`` is a tuple with ``lam[i] = <lam, alpha_{i+1}^vee>``.
* Positive roots are stored by their simple-root coefficients; pairings with
  coroots use the invariant form obtained by symmetrizing the Cartan matrix.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

Weight = tuple[int, ...]

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class RootSystemError(ValueError):
    """Invalid type/rank pair or incompatible weight."""


def classical_positive_root_count(type_letter: str, rank: int) -> int:
    return _POSITIVE_ROOT_COUNT[type_letter](rank)


def _validate(type_letter: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(type_letter)
    if not ok:
        raise RootSystemError(f"no simple root system of type {type_letter}{rank}")


def _cartan(type_letter: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        C[i][j] = a_ij
        C[j][i] = a_ji

    if type_letter in "ABCD":
        last = n - 1 if type_letter != "D" else n - 2
        for i in range(last):
            link(i, i + 1)
        if type_letter == "B":
            link(n - 2, n - 1, -2, -1)
        elif type_letter == "C":
            link(n - 2, n - 1, -1, -2)
        elif type_letter == "D":
            link(n - 3, n - 1)
    elif type_letter == "E":
        link(0, 2)
        link(2, 3)
        link(1, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif type_letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif type_letter == "G":
        link(0, 1, -1, -3)
    return C


def _symmetrizer(C: list[list[int]]) -> tuple[Fraction, ...]:
    """Squared root lengths ``(alpha_i, alpha_i)``, shortest equal to 2."""
    n = len(C)
    D: list[Fraction | None] = [None] * n
    D[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if C[i][j] and D[j] is None:
                # (alpha_i, alpha_j) = a_ij D_j / 2 = a_ji D_i / 2
                D[j] = D[i] * C[j][i] / C[i][j]
                stack.append(j)
    m = min(D)
    return tuple(2 * d / m for d in D)


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of a simple root system.

    Build instances with :func:`build_root_system`.
    """

    type_letter: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    root_lengths: tuple[Fraction, ...] = field(repr=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def simple_roots(self) -> list[Weight]:
        return [tuple(row) for row in self.cartan_matrix]

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def root_weight(self, coeffs: Sequence[int]) -> Weight:
        """Weight-basis coordinates of ``sum coeffs[i] alpha_i``."""
        n = self.rank
        return tuple(sum(coeffs[i] * self.cartan_matrix[i][j] for i in range(n))
                     for j in range(n))

    def inner(self, c1: Sequence[int], c2: Sequence[int]) -> Fraction:
        """Invariant form of two roots given by simple-root coefficients."""
        n = self.rank
        C, D = self.cartan_matrix, self.root_lengths
        return sum((c1[i] * c2[j] * C[i][j] * D[j] / 2
                    for i in range(n) for j in range(n) if c1[i] and c2[j]), Fraction(0))

    @property
    def positive_root_weights(self) -> list[Weight]:
        return [self.root_weight(c) for c in self.positive_roots]

    def zero(self) -> Weight:
        return (0,) * self.rank

    def omega(self, i: int) -> Weight:
        """Fundamental weight ``omega_i`` (1-based)."""
        check_index(self, i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))


def check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"simple root index {i} outside 1..{rs.rank}")


def check_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise RootSystemError(f"weight {lam} has length {len(lam)}, rank is {rs.rank}")
    return lam


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    """Cartan matrix and positive roots of a simple type.

    Positive roots are generated from the simple roots by root strings:
    for a root ``beta`` with ``alpha_i``-string ``beta - p alpha_i, ...,
    beta + q alpha_i`` one has ``p - q = <beta, alpha_i^vee>``.

    Examples
    --------
    >>> build_root_system("G", 2).cartan_matrix
    ((2, -1), (-3, 2))
    >>> build_root_system("A", 3).num_positive_roots
    6
    """
    type_letter = type_letter.upper()
    _validate(type_letter, rank)
    C = _cartan(type_letter, rank)
    D = _symmetrizer(C)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            w = [sum(beta[a] * C[a][j] for a in range(rank)) for j in range(rank)]
            for i in range(rank):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - w[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    ordered = tuple(sorted(roots, key=lambda c: (sum(c), tuple(-x for x in c))))
    rs = RootSystem(type_letter, rank, tuple(tuple(r) for r in C), D, ordered)
    assert rs.num_positive_roots == classical_positive_root_count(type_letter, rank)
    return rs


def parse_type(label: str) -> RootSystem:
    """``"A3"`` -> root system of type A3."""
    label = label.strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise RootSystemError(f"cannot parse root system label {label!r}")
    return build_root_system(label[0].upper(), int(label[1:]))


@dataclass(frozen=True)
class Parabolic:
    """Parabolic subgroup given by the removed simple roots (1-based).

    ``removed`` equal to every index describes the Borel subgroup; the empty
    set would be ``G`` itself, which operations needing ``G/P`` reject.
    """

    removed: frozenset[int]

    def __init__(self, removed: Iterable[int]):
        object.__setattr__(self, "removed", frozenset(int(i) for i in removed))

    @classmethod
    def borel(cls, rs: RootSystem) -> "Parabolic":
        return cls(range(1, rs.rank + 1))

    def validate(self, rs: RootSystem, proper: bool = True) -> None:
        for i in self.removed:
            check_index(rs, i)
        if proper and not self.removed:
            raise RootSystemError("parabolic equals G; G/P would be a point")

    def is_borel(self, rs: RootSystem) -> bool:
        return self.removed == frozenset(range(1, rs.rank + 1))

    def in_levi(self, coeffs: Sequence[int]) -> bool:
        """Whether a root (simple-root coefficients) lies in the Levi."""
        return all(coeffs[i - 1] == 0 for i in self.removed)


def pairing(rs: RootSystem, lam: Sequence[int], root: Sequence[int]) -> int:
    """``<lam, root^vee>`` for a root given by simple-root coefficients.

    Uses ``root^vee = sum_i c_i (alpha_i, alpha_i) / (root, root) alpha_i^vee``.
    """
    lam = check_weight(rs, lam)
    if len(root) != rs.rank:
        raise RootSystemError("root has the wrong rank")
    norm = rs.inner(root, root)
    val = sum((Fraction(root[i]) * rs.root_lengths[i] * lam[i] for i in range(rs.rank)),
              Fraction(0)) / norm
    assert val.denominator == 1
    return int(val)


def rho(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def two_rho_P(rs: RootSystem, parabolic: Parabolic) -> Weight:
    """``2 rho_P``: the sum of positive roots outside the Levi of ``P``.

    This is the weight of the anticanonical bundle of ``G/P``.
    """
    parabolic.validate(rs, proper=False)
    total = [0] * rs.rank
    for c in rs.positive_roots:
        if not parabolic.in_levi(c):
            w = rs.root_weight(c)
            for j in range(rs.rank):
                total[j] += w[j]
    return tuple(total)


rho_P = two_rho_P


def reflect(rs: RootSystem, i: int, mu: Sequence[int]) -> Weight:
    """Linear action of the simple reflection ``s_i`` (1-based)."""
    check_index(rs, i)
    row = rs.cartan_matrix[i - 1]
    m = mu[i - 1]
    return tuple(mu[j] - m * row[j] for j in range(rs.rank))


def act(rs: RootSystem, word: Sequence[int], mu: Sequence[int]) -> Weight:
    """Linear action of ``s_{w[0]} s_{w[1]} ...`` (rightmost applied first)."""
    mu = check_weight(rs, mu)
    for i in reversed(word):
        mu = reflect(rs, i, mu)
    return mu


def dot_action(rs: RootSystem, word: Sequence[int], lam: Sequence[int]) -> Weight:
    """``w . lam = w(lam + rho) - rho``; reflections apply right to left.

    >>> dot_action(build_root_system("A", 1), [1], (-2,))
    (0,)
    """
    lam = check_weight(rs, lam)
    mu = act(rs, word, tuple(x + 1 for x in lam))
    return tuple(x - 1 for x in mu)


@dataclass(frozen=True)
class Regularized:
    """Outcome of :func:`regularize` for a regular weight.

    ``word`` satisfies ``dot_action(word, lam) == weight``.
    """

    weight: Weight
    length: int
    word: tuple[int, ...]


def regularize(rs: RootSystem, lam: Sequence[int]) -> Regularized | None:
    """Move ``lam + rho`` into the dominant chamber.

    Returns ``None`` when ``lam + rho`` lies on a wall (the singular case).
    Otherwise returns the dominant ``w . lam`` with ``l(w)``; each reflection
    in a simple root with negative coordinate raises the length by one.
    """
    lam = check_weight(rs, lam)
    mu = [x + 1 for x in lam]
    applied: list[int] = []
    while True:
        i = next((j for j, x in enumerate(mu) if x < 0), None)
        if i is None:
            break
        mu = list(reflect(rs, i + 1, mu))
        applied.append(i + 1)
    if any(x == 0 for x in mu):
        return None
    return Regularized(tuple(x - 1 for x in mu), len(applied), tuple(reversed(applied)))


def dominant_conjugate(rs: RootSystem, mu: Sequence[int]) -> Weight:
    """The dominant weight in the linear Weyl orbit of ``mu``."""
    mu = list(check_weight(rs, mu))
    while True:
        i = next((j for j, x in enumerate(mu) if x < 0), None)
        if i is None:
            return tuple(mu)
        mu = list(reflect(rs, i + 1, mu))


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """``-w0 lam`` for dominant ``lam`` (highest weight of the dual module)."""
    return dominant_conjugate(rs, tuple(-x for x in lam))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension of the irreducible module of highest weight ``lam``.

    Evaluates ``prod <lam + rho, a^vee> / <rho, a^vee>`` over positive roots,
    pairing against coroots, which makes the formula independent of how the
    invariant form is scaled.

    >>> weyl_dim(build_root_system("A", 3), (1, 0, 1))
    15
    """
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise RootSystemError(f"weyl_dim needs a dominant weight, got {lam}")
    shifted = tuple(x + 1 for x in lam)
    num = prod(Fraction(pairing(rs, shifted, c)) for c in rs.positive_roots)
    den = prod(Fraction(pairing(rs, rho(rs), c)) for c in rs.positive_roots)
    val = num / den
    assert val.denominator == 1
    return int(val)


def format_weight(lam: Sequence[int]) -> str:
    """Compact label such as ``101``; falls back to commas for wide entries."""
    if all(0 <= x <= 9 for x in lam):
        return "".join(map(str, lam))
    return ",".join(map(str, lam))
