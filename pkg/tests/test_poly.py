from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgejac.poly import MultiPoly, PolyParseError, format_poly, monomials_of_degree, parse_poly

terms = st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3),
                        st.fractions(min_value=-20, max_value=20, max_denominator=7),
                        max_size=8)


def test_fermat_cubic_parses():
    f = parse_poly("1 3,0,0\n1 0,3,0\n1 0,0,3")
    assert f.nvars == 3 and len(f) == 3 and f.degree() == 3 and f.is_homogeneous()


def test_rational_coefficient_and_comments():
    f = parse_poly("# comment\n1/2 1,1,1   # trailing\n\n")
    assert f.coefficient((1, 1, 1)) == Fraction(1, 2)


def test_arity_error_names_line():
    with pytest.raises(PolyParseError, match="line 1"):
        parse_poly("1 1,1", nvars=3)
    with pytest.raises(PolyParseError, match="line 2"):
        parse_poly("1 1,0,0\nx 0,1,0")


def test_named_variables_with_signs():
    names = {"a": (0, 1), "b": (1, 1), "ba": (0, -1)}
    f = parse_poly("2 a*b^2\n3 ba\n-1", nvars=2, names=names)
    assert f.coefficient((1, 2)) == 2
    assert f.coefficient((1, 0)) == -3
    assert f.coefficient((0, 0)) == -1


@given(terms)
@settings(max_examples=200, deadline=None)
def test_format_parse_round_trip(t):
    f = MultiPoly(3, t)
    text = format_poly(f)
    g = parse_poly(text, nvars=3)
    assert g == f
    assert format_poly(g) == text


@given(terms, terms)
@settings(max_examples=100, deadline=None)
def test_product_rule_for_derivatives(t1, t2):
    f, g = MultiPoly(3, t1), MultiPoly(3, t2)
    for i in range(3):
        assert (f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i)


@given(terms)
@settings(max_examples=100, deadline=None)
def test_euler_identity_on_homogeneous_parts(t):
    f = MultiPoly(3, {e: c for e, c in t.items() if sum(e) == 4})
    total = MultiPoly(3)
    for i in range(3):
        total = total + f.polarize(i, i)
    assert total == f.scale(4)


def test_monomials_of_degree_count_and_order():
    ms = monomials_of_degree(4, 3)
    assert len(ms) == 20 and ms[0] == (3, 0, 0, 0) and ms[-1] == (0, 0, 0, 3)
