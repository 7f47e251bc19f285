from fractions import Fraction

import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgejac.linalg import DEFAULT_PRIME, SECOND_PRIME, SparseEchelon, bareiss_rank, rank_mod_p
from hodgejac.linalg import _fallback
from hodgejac.linalg.modular import fraction_mod, rref_mod_p

small_matrices = st.integers(1, 7).flatmap(
    lambda m: st.integers(1, 7).flatmap(
        lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def low_rank(rng, m, n, r):
    return rng.integers(-3, 4, size=(m, r)) @ rng.integers(-3, 4, size=(r, n))


@given(small_matrices)
@settings(max_examples=200, deadline=None)
def test_bareiss_matches_float_rank(rows):
    assert bareiss_rank(rows) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(small_matrices)
@settings(max_examples=200, deadline=None)
def test_modular_rank_matches_exact_on_small_entries(rows):
    assert rank_mod_p(np.array(rows)) == bareiss_rank(rows)


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_sparse_echelon_rank_and_tracking(rows):
    E = SparseEchelon(track=True)
    for i, r in enumerate(rows):
        E.insert({j: v for j, v in enumerate(r) if v}, i)
    assert E.rank == bareiss_rank(rows)
    # every pivot row is the recorded combination of the inserted rows
    for lead, prow in E.pivots.items():
        acc = {}
        for t, w in E.combos[lead].items():
            for j, v in enumerate(rows[t]):
                acc[j] = acc.get(j, 0) + w * v
        assert {j: v for j, v in acc.items() if v} == prow
        assert prow[lead] == 1 and min(prow) == lead


def test_sparse_echelon_reduce_reports_combination():
    rows = [{0: 1, 1: 2}, {1: 1, 2: 1}]
    E = SparseEchelon(track=True)
    for i, r in enumerate(rows):
        E.insert(r, i)
    target = {0: 2, 1: 7, 2: 3, 3: 5}
    rem, combo = E.reduce(target, {})
    assert rem == {3: 5}
    rebuilt = {}
    for t, w in combo.items():
        for j, v in rows[t].items():
            rebuilt[j] = rebuilt.get(j, 0) + w * v
    rebuilt = {j: v for j, v in rebuilt.items() if v}
    assert rebuilt == {0: 2, 1: 7, 2: 3}


@pytest.mark.parametrize("shape,r", [((300, 200), 150), ((700, 650), 640), ((90, 1200), 60)])
def test_modular_engine_on_low_rank_products(shape, r):
    rng = np.random.default_rng(7)
    A = low_rank(rng, *shape, r)
    assert rank_mod_p(A) == r
    assert rank_mod_p(sp.csr_matrix(A), SECOND_PRIME, chunk=32, merge=64) == r


def test_modular_engine_accepts_lazy_blocks():
    rng = np.random.default_rng(3)
    A = low_rank(rng, 400, 300, 210)

    class Lazy:
        shape = A.shape

        def row_block(self, a, b):
            return A[a:b]

    assert rank_mod_p(Lazy()) == 210


def test_rejects_large_modulus():
    with pytest.raises(ValueError):
        rank_mod_p(np.eye(3), p=(1 << 21) + 23)


def test_fraction_mod_inverts_denominators():
    p = DEFAULT_PRIME
    assert fraction_mod(Fraction(1, 2), p) * 2 % p == 1
    assert fraction_mod(-3, p) == p - 3
    with pytest.raises(ZeroDivisionError):
        fraction_mod(Fraction(1, p), p)


@pytest.mark.parametrize("seed", range(5))
def test_compiled_and_fallback_kernels_agree(seed):
    rng = np.random.default_rng(seed)
    p = DEFAULT_PRIME
    A = np.mod(low_rank(rng, 60, 80, 37), p).astype(np.float64)
    Y1, Y2 = np.ascontiguousarray(A.copy()), np.ascontiguousarray(A.copy())
    from hodgejac.linalg import modular

    k1, piv1 = modular._rref_block(Y1, p)
    k2, piv2 = _fallback.rref_block(Y2, p)
    assert k1 == k2 == 37
    assert list(piv1) == list(piv2)
    assert np.array_equal(np.mod(Y1[:k1], p), np.mod(Y2[:k2], p))


def test_rref_mod_p_is_reduced():
    R, piv = rref_mod_p(np.array([[2, 4, 6], [1, 1, 1], [3, 5, 7]]), 101)
    assert len(piv) == 2
    for i, c in enumerate(piv):
        assert R[i, c] == 1
        assert all(R[j, c] == 0 for j in range(len(piv)) if j != i)
