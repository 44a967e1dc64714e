from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gen import exact_matrices, matrices_in_S, matrices_in_S_times, nonzero_scalars
from sixvertex import (
    EXACT,
    GaussianRational,
    NotInSError,
    ParseError,
    SingularMatrixError,
    SixVertexMatrix,
    StatisticsUndefinedError,
    as_operator,
    classify,
    delta,
    delta_simplified,
    determinant,
    dual,
    from_operator,
    identity_like,
    inverse,
    matrix_from_json,
    matrix_to_json,
    projective_eq,
    r_family,
    FamilyParams,
    GroupElem3,
)
from sixvertex.matrices import SquareMatrix

I = SixVertexMatrix(1, 1, 0, 0, 1, 1)
U = SixVertexMatrix(1, 2, 1, 1, 1, 3)
R = SixVertexMatrix(5, 5, 4, 2, 3, 1)
F = lambda p, q=1: GaussianRational(Fraction(p, q))  # noqa: E731


def test_determinant_examples():
    assert determinant(I) == 1
    assert determinant(U) == 4
    assert determinant(SixVertexMatrix(1, 2, 2, 3, 3, 2)) == 0


def test_dual_and_inverse_examples():
    assert dual(U) == SixVertexMatrix(2, 1, -1, -1, 3, 1)
    assert dual(I) == I
    assert inverse(I) == I
    assert inverse(U) == SixVertexMatrix(1, F(1, 2), F(-1, 2), F(-1, 2), F(3, 2), F(1, 2))


def test_delta_examples():
    assert delta(R) == (F(3, 4), F(3, 2))
    assert delta(SixVertexMatrix(1, 1, 1, 1, 1, 1)) == (F(1, 2), F(1, 2))
    assert delta(SixVertexMatrix(5, -1, 4, 2, 3, 1)) == (0, 0)


def test_errors():
    with pytest.raises(NotInSError):
        dual(SixVertexMatrix(0, 1, 1, 1, 1, 1))
    with pytest.raises(SingularMatrixError):
        inverse(SixVertexMatrix(1, 1, 1, 1, 1, 1))
    with pytest.raises(StatisticsUndefinedError):
        delta(I)
    with pytest.raises(StatisticsUndefinedError):
        delta_simplified(SixVertexMatrix(1, 2, 0, 1, 1, 1), "ff")


def test_classify_examples():
    ones = classify(SixVertexMatrix(1, 1, 1, 1, 1, 1))
    assert ones.field_free and ones.constant_field and ones.non_free_fermionic
    ff = classify(SixVertexMatrix(5, -1, 4, 2, 3, 1))
    assert ff.free_fermionic and ff.non_constant_field and not ff.non_free_fermionic
    assert classify(SixVertexMatrix(1, 2, 0, 0, 1, 3)).diagonal
    assert classify(SixVertexMatrix(1, 2, 0, 5, 1, 3)).five_vertex
    assert classify(I).degenerate


def test_projective_eq_examples():
    assert projective_eq(R, 7 * R)
    assert projective_eq(I, SixVertexMatrix(2, 2, 0, 0, 2, 2))
    assert not projective_eq(SixVertexMatrix(1, 1, 1, 1, 1, 1), SixVertexMatrix(1, 1, 1, 1, 1, 2))


def test_as_operator_placement():
    m = as_operator(SixVertexMatrix(1, 2, 3, 4, 5, 6))
    assert m.tolist() == [[1, 0, 0, 0], [0, 5, 3, 0], [0, 4, 6, 0], [0, 0, 0, 2]]
    assert as_operator(I).equals(SquareMatrix.identity(4, EXACT))


def test_json_rejects_bad_input():
    with pytest.raises(ParseError):
        matrix_from_json({"a1": "1"})
    with pytest.raises(ParseError):
        matrix_from_json({**matrix_to_json(R), "d1": "1"})


def _sym(x):
    q = lambda r: sympy.Rational(int(r.numerator), int(r.denominator))  # noqa: E731
    return q(x.re) + sympy.I * q(x.im)


@given(exact_matrices)
def test_determinant_matches_sympy(u):
    a1, a2, b1, b2, c1, c2 = map(_sym, u.entries)
    generic = sympy.Matrix([[a1, 0, 0, 0], [0, c1, b1, 0], [0, b2, c2, 0], [0, 0, 0, a2]]).det()
    assert sympy.expand(generic - _sym(determinant(u))) == 0


@given(matrices_in_S)
def test_inverse_is_inverse(u):
    assert (as_operator(u) @ as_operator(inverse(u))).equals(SquareMatrix.identity(4, EXACT))
    assert projective_eq(dual(u), inverse(u))
    assert inverse(inverse(u)) == u


@given(matrices_in_S)
def test_dual_identity(u):
    P = u.c1 * u.c2 - u.b1 * u.b2
    assert (as_operator(u) @ as_operator(dual(u))).equals(SquareMatrix.identity(4, EXACT).scale(P))


@given(matrices_in_S_times, nonzero_scalars)
def test_delta_is_scale_invariant(u, k):
    assert delta(k * u) == delta(u)


@given(matrices_in_S_times)
def test_delta_inverse_law(u):
    """The statistics of the inverse pick up a1/a2 and a2/a1 respectively."""
    d, di = delta(u), delta(inverse(u))
    assert di.d1 == (u.a1 / u.a2) * d.d1
    assert di.d2 == (u.a2 / u.a1) * d.d2


@given(matrices_in_S_times)
def test_constant_field_delta_is_inverse_invariant(u):
    u = SixVertexMatrix(u.a1, u.a1, u.b1, u.b2, u.c1, u.c2)
    if u.c1 * u.c2 != u.b1 * u.b2:
        assert delta(inverse(u)) == delta(u)


@given(matrices_in_S_times)
def test_simplified_statistics(u):
    d1 = delta(u).d1
    cf = SixVertexMatrix(u.a1, u.a1, u.b1, u.b2, u.c1, u.c2)
    if cf.c1 * cf.c2 != cf.b1 * cf.b2:
        assert delta_simplified(cf, "cf") == delta(cf).d1
    if classify(u).free_fermionic:
        assert d1 == 0


@given(st.integers(-9, 9).filter(bool), st.integers(-9, 9).filter(bool), st.integers(1, 9), st.integers(1, 9))
def test_ff_family_simplified_statistic(q1, q2, z1, z2):
    """On the free-fermionic family the simplified statistic is (a1 - a2)/(2 b1) = (q1 + q2)/(2 q1 beta)."""
    if q1 == q2 or z1 == z2 or q1 * z1 == q2 * z2 or q1 * z2 == q2 * z1:
        return
    try:
        u = r_family(FamilyParams(q1, q2, 1), "ff", GroupElem3(z1, z2, 1))
    except NotInSError:
        return
    assert classify(u).free_fermionic
    assert delta_simplified(u, "ff") == F(q1 + q2, 2 * q1)


@given(exact_matrices)
def test_json_and_operator_round_trip(u):
    assert matrix_from_json(matrix_to_json(u)) == u
    assert from_operator(as_operator(u)) == u


def test_classify_flags_are_consistent():
    for u in (R, U, I, SixVertexMatrix(5, -1, 4, 2, 3, 1)):
        f = classify(u)
        assert f.constant_field != f.non_constant_field
        assert not (f.free_fermionic and f.non_free_fermionic)
    assert identity_like() == I
