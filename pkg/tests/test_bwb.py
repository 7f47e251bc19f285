import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgejac.bwb import (e1_page, filtered_cohomology_bound, gp_bundle_cohomology,
                          line_bundle_cohomology, wedge2_tangent_by_height,
                          wedge_cotangent_weights)
from hodgejac.rootsys import Parabolic, RootSystemError, build_root_system, dual_weight, weyl_dim
from hodgejac.vanishing import bott_projective

A3 = build_root_system("A", 3)


def test_example_weight():
    res = line_bundle_cohomology(A3, (2, -2, 2))
    (e,) = res.entries
    assert (e.degree, e.highest_weight, e.dimension) == (1, (1, 0, 1), 15)


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 2), ("G", 2), ("C", 3)])
@given(data=st.data())
@settings(max_examples=80, deadline=None)
def test_serre_duality(t, n, data):
    rs = build_root_system(t, n)
    lam = data.draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n))
    N = rs.num_positive_roots
    dual = tuple(-x - 2 for x in lam)       # -lam - 2 rho
    a, b = line_bundle_cohomology(rs, lam), line_bundle_cohomology(rs, dual)
    assert a.zero == b.zero
    for e in a.entries:
        (f,) = b.entries
        assert f.degree == N - e.degree
        assert f.highest_weight == dual_weight(rs, e.highest_weight)


@given(st.lists(st.integers(0, 5), min_size=3, max_size=3))
@settings(max_examples=50, deadline=None)
def test_borel_weil(lam):
    res = line_bundle_cohomology(A3, lam)
    assert res.dimension(0) == weyl_dim(A3, lam) and res.euler_characteristic() == weyl_dim(A3, lam)


def test_gp_bundle_requires_levi_dominance():
    with pytest.raises(RootSystemError):
        gp_bundle_cohomology(A3, Parabolic([2]), (-1, 0, 0))
    assert gp_bundle_cohomology(A3, Parabolic([2]), (0, -1, 0)).zero


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [0, 1, 2])
@pytest.mark.parametrize("m", [-6, -3, -1, 0, 1, 3])
def test_filtration_bound_on_projective_space_matches_bott(n, q, m):
    if q > n:
        return
    rs = build_root_system("A", n)
    par = Parabolic([1])
    bound = filtered_cohomology_bound(rs, wedge_cotangent_weights(rs, par, q),
                                      tuple(m if i == 0 else 0 for i in range(n)))
    bott = bott_projective(n, q, m)
    # the Euler characteristic is exact; the bound dominates every degree
    assert bound.euler_char == sum((-1) ** p * d for p, d in bott.items())
    for p, d in bott.items():
        assert bound.upper(p) >= d


def test_e1_page_of_wedge2_tangent():
    page = e1_page(A3, wedge2_tangent_by_height(A3))
    assert page == {
        0: {0: [(2, 1, 0), (0, 1, 2)]},
        1: {0: [(0, 2, 0)]},
        2: {0: [(0, 2, 0)]},
        3: {0: [(1, 0, 1), (1, 0, 1)], 1: [(0, 2, 0), (0, 2, 0)]},
        4: {1: [(1, 0, 1)]},
    }
