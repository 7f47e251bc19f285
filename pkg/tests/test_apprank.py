import logging

import numpy as np
import pytest

from hodgejac.ambient import Grassmannian, ProjectiveSpace, TorusHypersurface
from hodgejac.apprank import (DegreeBoundCertifier, SurjectivityStatus, degree_bound_certificate,
                              expected_total, multiplication_surjectivity, rank_check_cy,
                              verify_certificate)
from hodgejac.errors import PreconditionError
from hodgejac.poly import MultiPoly


@pytest.fixture(autouse=True)
def _quiet(caplog):
    caplog.set_level(logging.ERROR)


def fermat(n, d):
    return MultiPoly(n + 1, {tuple(d if j == i else 0 for j in range(n + 1)): 1
                             for i in range(n + 1)})


def random_member(certifier, rng, e):
    """``sum g_i r_i`` with random cofactors ``r_i`` in ``R^{e-1}``."""
    model = certifier.model
    source = model.space(model.section_degree(e - 1))
    h = MultiPoly(model.nvars)
    for g in certifier.generators:
        if rng.random() < 0.5:
            continue
        for m in rng.choice(len(source.basis), size=min(3, source.dim), replace=False):
            c = int(rng.integers(-5, 6))
            if c:
                h = h + g * MultiPoly(model.nvars, {source.basis[m]: c})
    if h.is_zero():
        h = certifier.generators[1] * MultiPoly(model.nvars, {source.basis[0]: 1})
    return model.space(model.section_degree(e)).normal_form(h)


@pytest.mark.parametrize("n,d,seed", [(2, 3, 0), (3, 4, 1)])
def test_rank_check_small_calabi_yau(n, d, seed):
    P = ProjectiveSpace(n, d)
    res = rank_check_cy(P, P.random_section(seed))
    assert res.agree and res.expected == res.computed_total
    assert res.expected == {2: 2, 3: 21}[n]


def test_rank_check_quintic_reuses_the_report(quintic):
    model, f, rep, _ = quintic
    res = rank_check_cy(model, f, report=rep)
    assert (res.computed_total, res.expected) == (204, 204)
    assert res.dims == (1, 101, 101, 1)


def test_rank_check_g24(g24_quartic):
    model, f, rep, _ = g24_quartic
    res = rank_check_cy(model, f, report=rep)
    assert res.expected == 181 and res.agree
    assert res.dims == (1, 89, 90, 1)


def test_rank_check_needs_calabi_yau():
    with pytest.raises(PreconditionError):
        rank_check_cy(ProjectiveSpace(2, 4), ProjectiveSpace(2, 4).random_section(0))
    with pytest.raises(PreconditionError):
        expected_total(TorusHypersurface(((0, 0), (1, 0), (0, 1))))


def test_certificate_on_the_cubic_curve():
    P = ProjectiveSpace(2, 3)
    cert = DegreeBoundCertifier(P, fermat(2, 3))
    rng = np.random.default_rng(0)
    for e in (1, 2, 3):
        h = random_member(cert, rng, e)
        c = cert.certify(h)
        assert c.member and c.max_cofactor_degree <= e - 1
        assert cert.verify(c)
    assert len(cert.quotient_basis(1)) == 1 and cert.quotient_basis(2) == []


def test_non_members_keep_explicit_coordinates():
    P = ProjectiveSpace(3, 4)
    cert = DegreeBoundCertifier(P, fermat(3, 4))
    basis = cert.quotient_basis(1)
    assert len(basis) == 19
    for m in basis[:5]:
        h = MultiPoly.monomial(m, 2)
        c = degree_bound_certificate(P, None, h, certifier=cert)
        assert not c.member
        assert c.reduced == {1: {m: 2}}
        assert verify_certificate(cert, c)


def test_mixed_degree_input():
    P = ProjectiveSpace(2, 3)
    cert = DegreeBoundCertifier(P, fermat(2, 3))
    h = random_member(cert, np.random.default_rng(3), 2) + MultiPoly.monomial((0, 0, 0), 1)
    c = cert.certify(h)
    assert not c.member and 0 in c.reduced and cert.verify(c)


def test_tampered_certificate_fails_verification():
    P = ProjectiveSpace(2, 3)
    cert = DegreeBoundCertifier(P, fermat(2, 3))
    c = cert.certify(random_member(cert, np.random.default_rng(1), 2))
    i, r = c.representation[0]
    c.representation[0] = (i, r + r)
    assert not cert.verify(c)


def test_certificate_preconditions():
    P = ProjectiveSpace(2, 3)
    cert = DegreeBoundCertifier(P, fermat(2, 3), max_degree=2)
    with pytest.raises(PreconditionError):
        cert.certify(MultiPoly.monomial((9, 0, 0)))
    with pytest.raises(PreconditionError):
        cert.certify(MultiPoly.monomial((2, 0, 0)))
    with pytest.raises(PreconditionError):
        DegreeBoundCertifier(ProjectiveSpace(2, 4), fermat(2, 4))


@pytest.mark.parametrize("model,k_max", [(ProjectiveSpace(2, 3), 5), (ProjectiveSpace(3, 4), 5),
                                         (Grassmannian(2, 4, 2), 5), (Grassmannian(2, 4, 4), 3)],
                         ids=["P2-3", "P3-4", "G24-2", "G24-4"])
def test_surjectivity_is_monotone(model, k_max):
    seen = False
    for k in range(k_max + 1):
        res = multiplication_surjectivity(model, k)
        if res.status is SurjectivityStatus.EMPTY_SOURCE:
            continue
        assert res.rank + res.corank == res.target_dim
        surj = res.status is SurjectivityStatus.SURJECTIVE
        assert surj or not seen
        seen = seen or surj
    assert seen


def test_surjectivity_examples():
    res = multiplication_surjectivity(ProjectiveSpace(2, 3), 0)
    assert res.status is SurjectivityStatus.EMPTY_SOURCE and res.target_dim == 1
    res = multiplication_surjectivity(ProjectiveSpace(3, 4), 1)
    assert res.status is SurjectivityStatus.SURJECTIVE
    assert res.source_dims == (35, 1) and res.target_dim == 35
    res = multiplication_surjectivity(Grassmannian(2, 4, 4), 1)
    assert res.middle_degree_context is False
    res = multiplication_surjectivity(ProjectiveSpace(3, 4), 1)
    assert res.middle_degree_context is True
    with pytest.raises(PreconditionError):
        multiplication_surjectivity(ProjectiveSpace(3, 4), -1)
