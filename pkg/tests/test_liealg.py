from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from weylblocks.exactmath import Polynomial, RatMatrix, parse_polynomial
from weylblocks.liealg import (
    LieAlgebraError,
    NotNilpotent,
    NotSemisimple,
    adjoint_data,
    build_sl,
    cartan_metric,
    check_automorphism,
    derivation,
    embed_subalgebra,
    make_algebra,
    nilpotent_exp,
    sl2_in_sl3,
    transport_polynomial,
)
from weylblocks.weyl import build_weyl_operators

SL3 = build_sl(3)
SL2 = build_sl(2)


def sympy_ad(g, i):
    """Oracle: ad(e_i) in the column convention straight from brackets of basis vectors."""
    cols = [g.bracket(g.basis_vector(i), g.basis_vector(j)) for j in range(g.dim)]
    return sympy.Matrix(g.dim, g.dim, lambda k, j: sympy.Rational(cols[j][k].numerator, cols[j][k].denominator))


def test_builtins_validate():
    SL2.validate()
    SL3.validate()
    assert SL3.labels == ("y1", "x1", "y2", "x2", "y3", "x3", "h1", "h2")


def test_cartan_metric_values():
    chi = adjoint_data(SL3).chi
    i = SL3.index
    assert chi[i("h1"), i("h1")] == 12
    assert chi[i("x1"), i("y1")] == 6
    assert chi[i("h1"), i("h2")] == -6
    assert adjoint_data(SL2).chi[2, 2] == 8
    # killing form oracle: Tr(ad_i ad_j)
    for a in range(SL3.dim):
        for b in range(SL3.dim):
            assert chi[a, b] == (sympy_ad(SL3, a) * sympy_ad(SL3, b)).trace()
    assert cartan_metric(SL3) == chi


def test_transformed_matrices_are_adjoint_matrices():
    ad = adjoint_data(SL3)
    for i in range(SL3.dim):
        assert ad.A_tilde[i] == SL3.ad_matrix(i)
        assert sympy.Matrix(ad.A_tilde[i].rows) == sympy_ad(SL3, i)


small = st.fractions(min_value=-3, max_value=3, max_denominator=2)
quad_terms = st.dictionaries(st.sampled_from([
    tuple(int(k == a) + int(k == b) for k in range(8)) for a in range(8) for b in range(a, 8)
] + [tuple(int(k == a) for k in range(8)) for a in range(8)]), small, max_size=4)


@given(quad_terms, st.integers(0, 7), st.integers(0, 7))
def test_derivation_commutator_identity(terms, i, j):
    p = Polynomial(SL3.labels, terms)
    D = lambda k, q: derivation(SL3, k, q)
    lhs = D(i, D(j, p)) - D(j, D(i, p))
    rhs = Polynomial.zero(SL3.labels)
    for k, c in enumerate(SL3.structure[i][j]):
        if c:
            rhs = rhs + D(k, p) * c
    assert lhs == rhs


def test_derivation_on_variables_is_bracket():
    for i in range(SL3.dim):
        for j in range(SL3.dim):
            img = derivation(SL3, i, Polynomial.var(SL3.labels, j))
            assert img == Polynomial.linear(SL3.labels, SL3.structure[i][j])


def perturbed(g, entry, delta):
    i, j, k = entry
    c = [[list(v) for v in row] for row in g.structure]
    c[i][j][k] += delta
    c[j][i][k] -= delta
    return c


def test_jacobi_violation_named():
    i, j = SL3.index("y1"), SL3.index("x1")
    c = perturbed(SL3, (i, j, SL3.index("h1")), Fraction(1))
    with pytest.raises(LieAlgebraError, match="Jacobi fails at"):
        make_algebra("bad", SL3.labels, c, SL3.cartan, (), validate=True)


def test_antisymmetry_violation_named():
    c = [[list(v) for v in row] for row in SL3.structure]
    c[0][2][4] += 1
    with pytest.raises(LieAlgebraError, match="antisymmetry fails at"):
        make_algebra("bad", SL3.labels, c, SL3.cartan, (), validate=True)


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7), st.integers(1, 3))
def test_random_perturbations_detected(i, j, k, delta):
    """Every nonzero antisymmetric change to sl(3) breaks Jacobi."""
    if i == j:
        return
    c = perturbed(SL3, (i, j, k), Fraction(delta))
    with pytest.raises(LieAlgebraError):
        make_algebra("bad", SL3.labels, c, SL3.cartan, (), validate=True)


def test_triple_violation_named():
    with pytest.raises(LieAlgebraError, match="violates"):
        make_algebra("bad", SL3.labels, SL3.structure, SL3.cartan, ((1, 0, 7),), validate=True)


def test_not_semisimple():
    # span{a, b} with [a, b] = b
    c = [[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
    c[0][1][1] = Fraction(1)
    c[1][0][1] = Fraction(-1)
    g = make_algebra("solvable", ("a", "b"), c, (0,), (), validate=True)
    with pytest.raises(NotSemisimple):
        adjoint_data(g)


def test_nilpotent_exp():
    x = SL3.index("x1")
    e = nilpotent_exp(SL3.ad_matrix(x))
    assert check_automorphism(SL3, e)
    m = sympy.Matrix(SL3.ad_matrix(x).rows)
    assert sympy.Matrix(e.rows) == sympy.exp(m)
    with pytest.raises(NotNilpotent):
        nilpotent_exp(SL3.ad_matrix(SL3.index("h1")))


def test_all_generated_operators_are_automorphisms():
    ops = build_weyl_operators(SL3, closure=True)
    assert len(ops) == 24
    assert all(check_automorphism(SL3, op.matrix) for op in ops)


def test_permutation_swap_is_not_automorphism():
    n = SL3.dim
    perm = list(range(n))
    a, b = SL3.index("x1"), SL3.index("h1")
    perm[a], perm[b] = perm[b], perm[a]
    p = RatMatrix([[int(perm[j] == i) for j in range(n)] for i in range(n)])
    assert not check_automorphism(SL3, p)


def test_embedding():
    emb = sl2_in_sl3()
    sub = embed_subalgebra(SL3, emb)
    assert sub.labels == ("y1", "x1", "h1", "y2", "y3", "x2", "x3", "h0")
    h1, h0 = sub.index("h1"), sub.index("h0")
    assert not any(sub.bracket(sub.basis_vector(h1), sub.basis_vector(h0)))
    assert sub.triples == ((1, 0, 2),)
    # the quadratic Casimir stays invariant after the change of variables
    c2 = parse_polynomial("3*(x1*y1 + x2*y2 + x3*y3) + h1^2 + h1*h2 + h2^2", SL3.labels)
    t = transport_polynomial(c2, emb)
    assert all(not derivation(sub, k, t) for k in range(sub.dim))


def test_singular_embedding_rejected():
    emb = sl2_in_sl3()
    bad = type(emb)(emb.name, RatMatrix([[0] * 8] * 8), emb.labels, emb.generator_indices, emb.sub_cartan)
    with pytest.raises(LieAlgebraError):
        embed_subalgebra(SL3, bad)
