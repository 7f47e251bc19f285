"""One test per acceptance criterion.

Every test records a ``criterion N: PASS/FAIL`` line that is printed in the
``acceptance criteria`` section of the pytest summary.
"""
import logging
import shlex
import time
from pathlib import Path

import numpy as np
import pytest

from hodgejac import report
from hodgejac.ambient import Grassmannian, ProjectiveSpace
from hodgejac.apprank import DegreeBoundCertifier
from hodgejac.bwb import (e1_page, filtered_cohomology_bound, line_bundle_cohomology,
                          wedge2_tangent_by_height)
from hodgejac.cayley import CayleyModel, variable_hodge_dims
from hodgejac.cli import run
from hodgejac.jacring import jacobian_graded_dims
from hodgejac.oracles import (ambient_middle_classes, ci_primitive_middle_betti, curve_genus,
                              fermat_jacobian_dims, grassmannian_betti)
from hodgejac.poly import MultiPoly
from hodgejac.rootsys import Parabolic, build_root_system, dual_weight, rho, two_rho_P, weyl_dim
from hodgejac.vanishing import (Status, _filtration_verdict, check_C1, grassmannian,
                                main_hypotheses, projective_space)

pytestmark = pytest.mark.acceptance
ROOT = Path(__file__).resolve().parents[1]
A3 = build_root_system("A", 3)


@pytest.fixture(autouse=True)
def _quiet(caplog):
    caplog.set_level(logging.ERROR)


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def palindromic(dims):
    return tuple(dims) == tuple(reversed(dims))


# 1 ---------------------------------------------------------------------------

def test_criterion_1_quintic_threefold(quintic, record_acceptance):
    _, _, rep, seconds = quintic
    dims = rep.dims[:4]
    oracle = fermat_jacobian_dims(4, 5)
    ok = dims == (1, 101, 101, 1) == oracle and sum(dims) == 204 and seconds < 120
    record_acceptance(1, ok, f"dims {dims}, Fermat count {oracle}, total {sum(dims)}, "
                             f"{seconds:.1f}s")
    assert ok
    assert rep.dims[4] == 0


# 2 ---------------------------------------------------------------------------

def test_criterion_2_elliptic_curve_two_ways(record_acceptance):
    P = ProjectiveSpace(2, 3)
    rep, t1 = timed(jacobian_graded_dims, P, P.random_section(1))
    m = CayleyModel(3, (2, 2))
    var, t2 = timed(variable_hodge_dims, m, m.random_sections(1))
    ok = (rep.dims == (1, 1) and var.dims == (1, 1) and t1 < 10 and t2 < 10
          and curve_genus(3, (2, 2)) == 1)
    record_acceptance(2, ok, f"cubic {rep.dims} in {t1:.2f}s, (2,2) in P^3 {var.dims} "
                             f"in {t2:.2f}s")
    assert ok


# 3 ---------------------------------------------------------------------------

def test_criterion_3_k3_quartic(record_acceptance):
    P = ProjectiveSpace(3, 4)
    rep, t = timed(jacobian_graded_dims, P, P.random_section(1))
    primitive = ci_primitive_middle_betti(3, (4,))
    ok = (rep.dims == (1, 19, 1) == fermat_jacobian_dims(3, 4) and rep.total == 21 == primitive
          and t < 30)
    record_acceptance(3, ok, f"dims {rep.dims}, total {rep.total}, primitive b2 {primitive}, "
                             f"{t:.2f}s")
    assert ok


# 4 ---------------------------------------------------------------------------

def test_criterion_4_bwb_on_random_a3_weights(record_acceptance):
    rng = np.random.default_rng(2024)
    weights = [tuple(int(x) for x in rng.integers(-6, 7, size=3)) for _ in range(1000)]
    N = A3.num_positive_roots
    t0 = time.perf_counter()
    bad = []
    for lam in weights:
        res = line_bundle_cohomology(A3, lam)
        degrees = [e.degree for e in res.entries if e.dimension]
        shifted = tuple(a + b for a, b in zip(lam, rho(A3)))
        signed = 0
        if not res.zero:
            (e,) = res.entries
            signed = (-1) ** e.degree * weyl_dim(A3, e.highest_weight)
        # Weyl's formula evaluated at a possibly non-dominant weight is the
        # signed dimension; it is zero on the walls.
        direct = weyl_dim_signed(shifted)
        dual = line_bundle_cohomology(A3, tuple(-x - 2 for x in lam))
        serre = (res.zero == dual.zero and all(
            f.degree == N - e.degree and f.highest_weight == dual_weight(A3, e.highest_weight)
            for e, f in zip(res.entries, dual.entries)))
        if len(degrees) > 1 or res.euler_characteristic() != signed or signed != direct or not serre:
            bad.append(lam)
    seconds = time.perf_counter() - t0
    ok = not bad and seconds < 5
    record_acceptance(4, ok, f"1000 weights, {len(bad)} violations, {seconds:.2f}s")
    assert ok, bad[:5]


def weyl_dim_signed(shifted):
    """Product over positive roots of ``<lam + rho, a> / <rho, a>`` for A3,
    written out with the roots as consecutive index ranges."""
    num = den = 1
    for i in range(3):
        for j in range(i, 3):
            num *= sum(shifted[i:j + 1])
            den *= j - i + 1
    return num // den


# 5 ---------------------------------------------------------------------------

def test_criterion_5_sl4_spectral_sequence_example(record_acceptance):
    fb = wedge2_tangent_by_height(A3)
    page = e1_page(A3, fb)
    bound = filtered_cohomology_bound(A3, fb)
    alpha13 = (2, -2, 2)                      # weight of e_{alpha_1} ^ e_{alpha_3}
    factor = next(f for f in bound.factors if f.weight == alpha13)
    (entry,) = factor.result.entries
    table = {                                  # nonzero entries of the published table
        0: {0: [(2, 1, 0), (0, 1, 2)]},
        2: {0: [(0, 2, 0)]},
        3: {0: [(1, 0, 1), (1, 0, 1)], 1: [(0, 2, 0), (0, 2, 0)]},
        4: {1: [(1, 0, 1)]},
    }
    reproduced = all(page.get(p, {}).get(d) == ws for p, cols in table.items()
                     for d, ws in cols.items())
    verdict = _filtration_verdict(bound, 1, "H^1(wedge^2 T)")
    ok = (reproduced and (entry.degree, entry.highest_weight, entry.dimension) == (1, (1, 0, 1), 15)
          and (0, 2, 0) in page[1][0] and verdict.status is Status.INCONCLUSIVE)
    record_acceptance(5, ok, f"H^1 of the alpha1+alpha3 factor = V(1,0,1) dim {entry.dimension}; "
                             f"H^1 verdict {verdict.status.value}; level-1 entries {page[1]}")
    assert ok


# 6 ---------------------------------------------------------------------------

def test_criterion_6_vanishing_checkers(record_acceptance):
    a_bad = []
    for n in range(1, 5):
        rs, par = projective_space(n)
        for d in range(1, 7):
            for k in range(1, 7):
                v = check_C1(rs, par, (d,) + (0,) * (n - 1), k)
                expected = Status.NON_VANISHING if k * d == n else Status.VANISHES
                if v.status is not expected:
                    a_bad.append((n, d, k))
    b_agree, b_definite, b_bad = 0, 0, []
    spaces = [(build_root_system("A", 2), None), (build_root_system("A", 3), None)]
    spaces = [(rs, Parabolic.borel(rs)) for rs, _ in spaces] + [grassmannian(2, 4)]
    for rs, par in spaces:
        K = two_rho_P(rs, par)
        for k in (1, 2, 3):
            short = check_C1(rs, par, K, k)
            bound = check_C1(rs, par, K, k, use_theorems=False)
            if bound.status is Status.INCONCLUSIVE:
                b_agree += short.status is not Status.INCONCLUSIVE
            else:
                b_definite += 1
                b_agree += bound.status is short.status
                if bound.status is not short.status:
                    b_bad.append((rs.name, k))
    rs, par = grassmannian(2, 4)
    c_bad = [(t, k, v.condition) for t in (3, 4, 5, 6) for k in range(4)
             for v in main_hypotheses(rs, par, (0, t, 0), 4, k) if v.status is not Status.VANISHES]
    ok = not a_bad and not b_bad and b_agree == 9 and not c_bad
    record_acceptance(6, ok, f"(a) {len(a_bad)} mismatches; (b) {b_definite}/9 decided by bounds, "
                             f"no contradiction; (c) {len(c_bad)} non-vanishing triples")
    assert ok, (a_bad, b_bad, c_bad)


# 7 ---------------------------------------------------------------------------

def hook_content_dim(partition, n):
    num = den = 1
    conj = [sum(1 for p in partition if p > j) for j in range(partition[0])]
    for i, row in enumerate(partition):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def test_criterion_7_grassmannian_bases(record_acceptance):
    G = Grassmannian(2, 4, 1)
    dims = [len(G.sections_basis(k)) for k in range(1, 5)]
    independent = [hook_content_dim([k, k], 4) for k in range(1, 5)]
    library = [weyl_dim(A3, (0, k, 0)) for k in range(1, 5)]
    ok = dims == independent == library == [6, 20, 50, 105]
    record_acceptance(7, ok, f"bases {dims}, hook-content {independent}")
    assert ok


# 8 ---------------------------------------------------------------------------

def _palindrome_runs():
    runs = {}
    for n, d in ((2, 3), (3, 4)):
        P = ProjectiveSpace(n, d)
        runs[f"P{n} d={d}"] = [jacobian_graded_dims(P, P.random_section(s), check_hypotheses=False).dims
                               for s in range(5)]
    P = ProjectiveSpace(4, 5)
    runs["P4 d=5"] = [jacobian_graded_dims(P, P.random_section(s), check_smoothness=False,
                                           check_hypotheses=False).dims for s in range(5)]
    G = Grassmannian(2, 4, 4)
    runs["G(2,4) d=4"] = [jacobian_graded_dims(G, G.random_section(s), check_hypotheses=False).dims
                          for s in range(5)]
    return runs


@pytest.fixture(scope="module")
def palindrome_runs():
    return _palindrome_runs()


def test_criterion_8_calabi_yau_symmetry(palindrome_runs, record_acceptance):
    runs = palindrome_runs
    projective_ok = all(palindromic(d) for key in ("P2 d=3", "P3 d=4", "P4 d=5")
                        for d in runs[key])
    g24 = runs["G(2,4) d=4"]
    extra = ambient_middle_classes(grassmannian_betti(2, 4))
    variable = [tuple(x - (extra if k == 2 else 0) for k, x in enumerate(d)) for d in g24]
    literal_ok = all(palindromic(d) for d in g24)
    record_acceptance(8, projective_ok and literal_ok,
                      f"P^n cases palindromic: {projective_ok}; G(2,4) dims {sorted(set(g24))} "
                      f"literal palindrome {literal_ok}, after removing the {extra} ambient "
                      f"(2,2) class {sorted(set(variable))}")
    assert projective_ok
    assert all(d == (1, 89, 90, 1) and sum(d) == 181 for d in g24)
    assert all(palindromic(d) for d in variable)


@pytest.mark.xfail(strict=True, reason="M/JM on G(2,4) includes the primitive class restricted "
                                       "from H^4(G(2,4)), which sits in the middle degree only")
def test_criterion_8_literal_g24_palindrome(palindrome_runs):
    assert all(palindromic(d) for d in palindrome_runs["G(2,4) d=4"])


# 9 ---------------------------------------------------------------------------

def fermat(n, d):
    return MultiPoly(n + 1, {tuple(d if j == i else 0 for j in range(n + 1)): 1
                             for i in range(n + 1)})


def random_member(cert, rng, e):
    model = cert.model
    source = model.space(model.section_degree(e - 1))
    h = MultiPoly(model.nvars)
    while h.is_zero():
        for g in cert.generators:
            if rng.random() < 0.6:
                continue
            for m in rng.choice(source.dim, size=min(2, source.dim), replace=False):
                c = int(rng.integers(-9, 10))
                if c:
                    h = h + g * MultiPoly(model.nvars, {source.basis[m]: c})
    return h


def test_criterion_9_degree_bound_round_trip(record_acceptance):
    t0 = time.perf_counter()
    P = ProjectiveSpace(4, 5)
    cert = DegreeBoundCertifier(P, fermat(4, 5), max_degree=2)
    rng = np.random.default_rng(9)
    members_ok = 0
    for i in range(100):
        e = 1 + i % 2
        c = cert.certify(random_member(cert, rng, e))
        if c.member and c.max_cofactor_degree <= e - 1 and cert.verify(c):
            members_ok += 1
    basis = cert.quotient_basis(1)
    picks = [basis[int(j)] for j in rng.choice(len(basis), size=10, replace=False)]
    rejected = 0
    for m in picks:
        c = cert.certify(MultiPoly.monomial(m, 1))
        if not c.member and c.reduced == {1: {m: 1}} and cert.verify(c):
            rejected += 1
    seconds = time.perf_counter() - t0
    ok = members_ok == 100 and rejected == 10 and len(basis) == 101 and seconds < 60
    record_acceptance(9, ok, f"{members_ok}/100 members certified, {rejected}/10 non-members "
                             f"rejected with their surviving coordinate, {seconds:.1f}s "
                             f"(Fermat quintic)")
    assert ok


# 10 --------------------------------------------------------------------------

def test_criterion_10_determinism(tmp_path, monkeypatch, record_acceptance):
    monkeypatch.chdir(ROOT)
    lines = (ROOT / "samples" / "commands.txt").read_text().splitlines()
    commands = [shlex.split(x) for x in lines if x.strip() and not x.startswith("#")]
    stable = lambda r: {k: v for k, v in r.items() if k not in report.VOLATILE_KEYS}
    identical = 0
    for i, argv in enumerate(commands):
        texts = []
        for run_id in (0, 1):
            out = tmp_path / f"{i}-{run_id}.json"
            assert run(argv + ["-o", str(out)]) == 0, argv
            texts.append(report.canonical_json(stable(report.load(out))).encode())
        identical += texts[0] == texts[1]
    ok = identical == len(commands)
    record_acceptance(10, ok, f"{identical}/{len(commands)} sample commands gave byte-identical "
                              f"canonical reports")
    assert ok
