from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from weylblocks.exactmath import (
    Polynomial,
    RatMatrix,
    SingularMatrix,
    VariableMismatch,
    kernel_basis,
    mat_inverse,
    mat_mul,
    parse_polynomial,
    poly_add,
    poly_mul,
    poly_substitute_linear,
    primitive_integer_vector,
    solve_linear,
)

VARS = ("a", "b", "c")
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monomials = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.dictionaries(monomials, small, max_size=5).map(lambda t: Polynomial(VARS, t))


def to_sympy(p: Polynomial):
    syms = sympy.symbols(p.variables)
    return sympy.expand(sum((sympy.Rational(c.numerator, c.denominator) *
                             sympy.Mul(*[s ** e for s, e in zip(syms, m)]) for m, c in p.terms.items()),
                            sympy.Integer(0)))


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(VARS)
    assert p * Polynomial.constant(VARS, 1) == p


@given(polys, polys)
def test_product_matches_sympy(p, q):
    assert to_sympy(poly_mul(p, q)) == sympy.expand(to_sympy(p) * to_sympy(q))


@given(polys)
def test_no_zero_terms_stored(p):
    assert all(c != 0 for c in (p - p * 2 + p).terms.values())
    assert all(c != 0 for c in p.terms.values())


def test_additive_inverse_and_disjoint_sum():
    v = ("x1", "y1", "h1", "h2")
    x1y1 = parse_polynomial("x1*y1", v)
    assert poly_add(x1y1, -x1y1).is_zero()
    s = poly_add(parse_polynomial("h1^2", v), parse_polynomial("h1*h2", v))
    assert len(s.terms) == 2


def test_block_combination_gives_quadratic_casimir():
    v = ("y1", "x1", "y2", "x2", "y3", "x3", "h1", "h2")
    w21 = parse_polynomial("x1*y1 + x2*y2 + x3*y3", v)
    w22 = parse_polynomial("h1^2 + h1*h2 + h2^2", v)
    c2 = parse_polynomial("3*x1*y1 + 3*x2*y2 + 3*x3*y3 + h1^2 + h1*h2 + h2^2", v)
    assert poly_add(w21 * 3, w22) == c2


def test_mismatched_variables_rejected():
    p = Polynomial.var(("a", "b"), "a")
    q = Polynomial.var(("a", "c"), "a")
    with pytest.raises(VariableMismatch):
        poly_add(p, q)
    with pytest.raises(VariableMismatch):
        poly_mul(p, q)


def test_linear_substitution():
    v = ("x", "y")
    p = parse_polynomial("x^2*y + 3*y", v)
    images = {"x": parse_polynomial("-y", v), "y": parse_polynomial("x + y", v)}
    got = poly_substitute_linear(p, images)
    assert got == parse_polynomial("y^2*(x + y) + 3*(x + y)", v)
    with pytest.raises(ValueError):
        poly_substitute_linear(p, {"x": parse_polynomial("x^2", v), "y": images["y"]})
    with pytest.raises(KeyError):
        poly_substitute_linear(p, {"x": images["x"]})


@given(polys)
def test_text_round_trip(p):
    assert parse_polynomial(str(p), VARS) == p


@given(polys)
def test_latex_and_text_share_terms(p):
    assert len(p.latex_terms()) == len(p.terms)


def test_normalized_is_primitive_with_positive_lead():
    p = parse_polynomial("-6*a^2 + 4/3*b", VARS).normalized()
    assert p == parse_polynomial("9*a^2 - 2*b", VARS)


# -- matrices ---------------------------------------------------------------

square3 = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3)


@given(square3)
def test_inverse_or_singular(rows):
    m = RatMatrix(rows)
    det = sympy.Matrix(rows).det()
    if det == 0:
        with pytest.raises(SingularMatrix):
            mat_inverse(m)
    else:
        assert mat_mul(m, mat_inverse(m)) == RatMatrix.identity(3)
        assert m.rank() == 3


def test_matrix_entries_in_lowest_terms():
    m = RatMatrix([[Fraction(2, 4), 3]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 0].denominator == 2


wide = st.lists(st.lists(st.integers(-2, 2), min_size=5, max_size=5), min_size=1, max_size=4)


@given(wide)
def test_kernel_matches_sympy_nullspace(rows):
    m = RatMatrix(rows)
    kernel = kernel_basis(m)
    oracle = sympy.Matrix(rows).nullspace()
    assert len(kernel) == len(oracle)
    for v in kernel:
        assert all(x == 0 for x in m.apply(v))
        first = next(x for x in v if x)
        assert first > 0
        g = 0
        for x in v:
            g = gcd(g, x)
        assert g == 1
    if kernel:
        assert sympy.Matrix([list(v) for v in kernel]).rank() == len(kernel)


def test_kernel_examples():
    assert kernel_basis(RatMatrix([[1, -3]])) == [(3, 1)]
    assert kernel_basis(RatMatrix([[1, 0], [0, 1]])) == []
    assert primitive_integer_vector([Fraction(-1, 2), Fraction(3, 4)]) == (2, -3)


def test_solve_linear():
    cols = [{0: Fraction(1)}, {0: Fraction(1), 1: Fraction(2)}]
    assert solve_linear(cols, {0: Fraction(3), 1: Fraction(4)}) == [1, 2]
    assert solve_linear(cols[:1], {1: Fraction(1)}) is None
