import pytest

from hodgejac.oracles import (ambient_middle_classes, bounded_monomial_count, ci_betti_numbers,
                              ci_euler_characteristic, ci_primitive_middle_betti,
                              complement_middle_betti, curve_genus, expected_complement_total,
                              fermat_jacobian_dims, grassmannian_betti,
                              koszul_euler_characteristic, projective_betti)


def test_fermat_counts():
    assert fermat_jacobian_dims(4, 5) == (1, 101, 101, 1)
    assert fermat_jacobian_dims(3, 4) == (1, 19, 1)
    assert fermat_jacobian_dims(2, 3) == (1, 1)
    assert fermat_jacobian_dims(2, 4) == (3, 3)            # plane quartic, genus 3


@pytest.mark.parametrize("n,d", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)])
def test_fermat_total_equals_primitive_betti(n, d):
    assert sum(fermat_jacobian_dims(n, d)) == ci_primitive_middle_betti(n, (d,))


def test_bounded_count_brute_force():
    from itertools import product

    for nv, deg, cap in [(3, 4, 2), (4, 6, 3), (2, 5, 1)]:
        brute = sum(1 for e in product(range(cap + 1), repeat=nv) if sum(e) == deg)
        assert bounded_monomial_count(nv, deg, cap) == brute


def test_complete_intersection_invariants():
    assert ci_euler_characteristic(4, (5,)) == -200
    assert ci_euler_characteristic(3, (4,)) == 24
    assert ci_euler_characteristic(5, (3, 3)) == -144
    assert ci_betti_numbers(5, (2, 4))[3] == 180
    assert ci_primitive_middle_betti(5, (2, 2, 2)) == 21
    assert curve_genus(3, (2, 2)) == 1 and curve_genus(2, (4,)) == 3
    assert koszul_euler_characteristic(3, (4,)) == 2      # chi(O_K3)


def test_betti_and_complement():
    assert grassmannian_betti(2, 4) == (1, 0, 1, 0, 2, 0, 1, 0, 1)
    assert sum(grassmannian_betti(2, 5)) == 10
    assert ambient_middle_classes(grassmannian_betti(2, 4)) == 1
    assert ambient_middle_classes(projective_betti(4)) == 0
    assert complement_middle_betti(projective_betti(4), ci_betti_numbers(4, (5,))) == 204
    assert expected_complement_total("grassmannian", a=2, b=4) == 181
