from math import comb

import pytest

from hodgejac.errors import PreconditionError
from hodgejac.rootsys import Parabolic, build_root_system, two_rho_P
from hodgejac.vanishing import (Status, adjoint_h1_projective, bott_projective, check_C, check_C1,
                                check_C1V, check_CV2, grassmannian, main_hypotheses,
                                main_theorem_range, projective_space, vjm_hypotheses,
                                vjm_theorem_range)


def chi_omega(n, q, m):
    """Euler characteristic of Omega^q(m) on P^n from the Euler sequence."""
    chi_o = lambda t: comb(t + n, n) if t >= 0 else (-1) ** n * comb(-t - 1, n) if -t - 1 >= n else 0
    return sum((-1) ** (q - j) * comb(n + 1, j) * chi_o(m - j) for j in range(q + 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_bott_formula_single_degree_and_euler_characteristic(n):
    for q in range(n + 1):
        for m in range(-9, 9):
            h = bott_projective(n, q, m)
            assert len(h) <= 1
            assert sum((-1) ** p * d for p, d in h.items()) == chi_omega(n, q, m)


def test_condition_c1_on_projective_space():
    for n in range(1, 5):
        rs, par = projective_space(n)
        for d in range(1, 7):
            L = (d,) + (0,) * (n - 1)
            for k in range(1, 7):
                if n == 1 and k * d - 2 <= -2:
                    continue
                v = check_C1(rs, par, L, k)
                expected = Status.NON_VANISHING if k * d == n else Status.VANISHES
                assert v.status is expected, (n, d, k)


def test_condition_c_on_projective_space_uses_bott():
    rs, par = projective_space(3)
    # H^p(Omega^q (x) O(l d)) with d = 1: H^1(Omega^1) survives only at twist 0
    assert check_C(rs, par, (1, 0, 0), 1, 1, 1).status is Status.VANISHES
    v = check_C(rs, par, (1, 0, 0), 1, 3, 1)  # H^1(O(-3)) = 0 on P^3
    assert v.status is Status.VANISHES


def test_grassmannian_o2_fails_and_o3_vanishes():
    rs, par = grassmannian(2, 4)
    statuses = {t: {v.status for k in range(4) for v in main_hypotheses(rs, par, (0, t, 0), 4, k)}
                for t in (2, 3, 4)}
    assert Status.NON_VANISHING in statuses[2]
    assert statuses[3] == statuses[4] == {Status.VANISHES}


def test_anticanonical_shortcut_never_contradicts_bounds():
    cases = [(build_root_system("A", 2), None), (build_root_system("A", 3), None)]
    spaces = [(rs, Parabolic.borel(rs)) for rs, _ in cases] + [grassmannian(2, 4)]
    definite = 0
    for rs, par in spaces:
        K = two_rho_P(rs, par)
        for k in (1, 2, 3):
            full = check_C1(rs, par, K, k)
            bound = check_C1(rs, par, K, k, use_theorems=False)
            assert full.status is not Status.INCONCLUSIVE
            if bound.status is not Status.INCONCLUSIVE:
                definite += 1
                assert bound.status is full.status
    assert definite >= 4


def test_exceptional_automorphism_cases_flagged():
    for t, n, removed in [("C", 3, [1]), ("B", 3, [3]), ("G", 2, [1])]:
        rs = build_root_system(t, n)
        par = Parabolic(removed)
        assert check_C1(rs, par, two_rho_P(rs, par), 1).status is Status.NON_VANISHING


def test_ranges():
    assert main_theorem_range(3, 1) == [(1, 2, 1)]
    assert set(main_theorem_range(4, 2)) == {(1, 3, 2), (2, 2, 1), (1, 2, 1), (1, 3, 1)}
    assert all(l >= 1 for p, q, l in vjm_theorem_range(5, 3, 2))


def test_split_bundle_conditions_for_elliptic_and_k3_intersections():
    for n, degrees in [(3, (2, 2)), (5, (2, 2, 2)), (4, (2, 3))]:
        for k in range(n - len(degrees) + 1):
            assert all(v.status is Status.VANISHES for v in vjm_hypotheses(n, degrees, k))


def test_split_bundle_failure_detected():
    # two hyperplanes in P^3: the twist O(-1) of the adjoint bundle appears at k = 1
    rs, par = projective_space(3)
    statuses = {check_C1V(rs, par, (1, 1), k).status for k in range(4)}
    assert Status.NON_VANISHING in statuses


def test_preconditions():
    rs, par = projective_space(2)
    with pytest.raises(PreconditionError):
        check_C(rs, par, (1, 0), 0, 1, 1)
    with pytest.raises(PreconditionError):
        check_C1(rs, par, (1, 0), 0)
    with pytest.raises(PreconditionError):
        check_C(rs, par, (1, 1), 1, 1, 1)      # not a line bundle on P^2
    with pytest.raises(PreconditionError):
        check_CV2(rs, par, (2, 2), 0, 1, 1)


def test_adjoint_h1():
    assert adjoint_h1_projective(4, -1) == 5
    assert adjoint_h1_projective(4, 0) == adjoint_h1_projective(4, 3) == 0
