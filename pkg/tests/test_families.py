import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import family_params, gl2gl1, group_elem
from sixvertex import (
    EXACT,
    FamilyParams,
    GaussianRational,
    GL2GL1Element,
    GroupElem3,
    NotInSError,
    SixVertexMatrix,
    as_operator,
    asm_matrix,
    classify,
    five_vertex,
    is_commutative_pair,
    is_yb_solution,
    projective_eq,
    quantum_r,
    r_as_tl,
    r_family,
    tau,
    tl_e_matrix,
    tl_generator,
)
from sixvertex.matrices import SquareMatrix

F = lambda p, q=1: GaussianRational(Fraction(p, q))  # noqa: E731
P21 = FamilyParams(2, 1, 1)


def test_tau_examples():
    assert tau(GL2GL1Element(1, 1, -1, 2, 3)) == SixVertexMatrix(1, 2, 1, 1, 3, 1)
    assert tau(GL2GL1Element(1, 0, 0, 1, 1)) == SixVertexMatrix(1, 1, 0, 0, 1, 1)
    # a1 a2 + b1 b2 is the GL2 determinant, so every tau image has c2 != 0.
    g = GL2GL1Element(2, 3, 5, 7, 11)
    t = tau(g)
    assert t.c1 * t.c2 == g.m11 * g.m22 - g.m12 * g.m21
    with pytest.raises(ValueError):
        GL2GL1Element(1, 2, 2, 4, 1)


def test_r_family_examples():
    assert r_family(P21, "cf", GroupElem3(3, 1, 1)) == SixVertexMatrix(5, 5, 4, 2, 3, 1)
    ff = r_family(P21, "ff", GroupElem3(3, 1, 1))
    assert ff == SixVertexMatrix(5, -1, 4, 2, 3, 1) and classify(ff).free_fermionic
    assert r_family(P21, "cf", GroupElem3(1, 1, 1)) == SixVertexMatrix(1, 1, 0, 0, 1, 1)


def test_r_family_errors():
    with pytest.raises(ValueError):
        FamilyParams(2, 2, 1)
    with pytest.raises(ValueError):
        FamilyParams(2, 1, 0)
    with pytest.raises(NotInSError) as info:
        r_family(P21, "cf", GroupElem3(1, 2, 1))
    assert "a1" in info.value.vanishing


def test_quantum_examples():
    assert quantum_r(2, 3, "cf") == SixVertexMatrix(F(35, 6), F(35, 6), F(16, 3), F(4, 3), F(9, 2), F(1, 2))
    assert quantum_r(2, 3, "ff") == SixVertexMatrix(F(35, 6), F(-5, 6), F(16, 3), F(4, 3), F(9, 2), F(1, 2))
    assert quantum_r(2, 1, "cf") == SixVertexMatrix(*([F(3, 2)] * 2), 0, 0, F(3, 2), F(3, 2))


def test_five_vertex_matrices():
    # The matrices are keyed by the entry that actually vanishes.
    assert five_vertex("cf", "b1_zero", 3, 1) == SixVertexMatrix(1, 1, 0, 2, 3, 1)
    assert five_vertex("cf", "b2_zero", 3, 1) == SixVertexMatrix(3, 3, 2, 0, 3, 1)
    assert five_vertex("ff", "b1_zero", 3, 1) == SixVertexMatrix(1, 3, 0, 2, 3, 1)
    assert five_vertex("ff", "b2_zero", 3, 1) == SixVertexMatrix(3, 1, 2, 0, 3, 1)
    for kind in ("cf", "ff"):
        for which in ("b1_zero", "b2_zero"):
            assert classify(five_vertex(kind, which, 5, 2, 3, 7)).five_vertex


@pytest.mark.parametrize("kind", ["cf", "ff"])
@pytest.mark.parametrize("which", ["b1_zero", "b2_zero"])
def test_five_vertex_is_a_scaled_limit(kind, which):
    """Rescaling R(q1, q2) by 1/q and letting the other q go to zero."""
    z1, z2, w, beta = F(3), F(1), F(2), F(5)
    eps = GaussianRational(Fraction(1, 10**12))
    p = FamilyParams(eps, 1, beta) if which == "b1_zero" else FamilyParams(1, eps, beta)
    scale = -1 if which == "b1_zero" else 1
    r = r_family(p, kind, GroupElem3(z1, z2, w))
    limit = five_vertex(kind, which, z1, z2, w, beta if which == "b2_zero" else -1 / beta)
    got = [float((scale * x).re) for x in r.entries]
    want = [float(x.re) for x in limit.entries]
    assert got == pytest.approx(want, rel=1e-9, abs=1e-9)


def test_five_vertex_families_solve_parametrized_ybe():
    rng = random.Random(5)
    for kind in ("cf", "ff"):
        for which in ("b1_zero", "b2_zero"):
            for _ in range(20):
                g, h = group_elem(rng), group_elem(rng)
                gh = g * h
                triple = [five_vertex(kind, which, x.z1, x.z2, x.w, 3) for x in (g, gh, h)]
                assert is_yb_solution(*triple)


def test_asm_matrix():
    m = asm_matrix()
    target = 1j * 3**0.5
    assert all(abs(x - target) < 1e-12 for x in m.entries)
    assert projective_eq(m, SixVertexMatrix(*([1.0] * 6)))
    assert classify(m).field_free
    assert abs(cmath.exp(1j * cmath.pi / 3) ** 3 + 1) < 1e-12


def test_tl_examples():
    E = tl_generator(2, 2, 1).matrix
    assert (E @ E).equals(E.scale(-F(5, 2)))
    E1, E2 = tl_generator(2, 3, 1).matrix, tl_generator(2, 3, 2).matrix
    assert (E1 @ E2 @ E1).equals(E1)
    E1, E3 = tl_generator(F(1, 3), 4, 1).matrix, tl_generator(F(1, 3), 4, 3).matrix
    assert (E1 @ E3).equals(E3 @ E1)
    assert tl_generator(2, 6, 5).matrix.n == 64


@pytest.mark.parametrize("n,k", [(1, 1), (3, 0), (3, 3), (7, 1)])
def test_tl_range_errors(n, k):
    with pytest.raises(ValueError):
        tl_generator(2, n, k)


def test_r_as_tl_example():
    assert r_as_tl(2, 3, 1) == (F(11, 2), 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_homogeneity_and_commutativity(seed):
    rng = random.Random(seed)
    p, g, h = family_params(rng), group_elem(rng), group_elem(rng)
    lam = GaussianRational(rng.randint(1, 9), rng.randint(-3, 3))
    for kind in ("cf", "ff"):
        try:
            rg, rh = r_family(p, kind, g), r_family(p, kind, h)
            scaled = r_family(p, kind, GroupElem3(lam * g.z1, lam * g.z2, g.w))
        except NotInSError:
            continue
        assert projective_eq(scaled, rg)
        assert is_commutative_pair(rg, rh)
        if kind == "ff":
            assert classify(rg).free_fermionic


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_tau_images_are_free_fermionic(seed):
    rng = random.Random(seed)
    try:
        assert classify(tau(gl2gl1(rng))).free_fermionic
    except NotInSError:
        pass


def test_tl_decomposition_operator():
    q = F(3, 2)
    E = tl_e_matrix(q)
    assert (E @ E).equals(E.scale(-(q + 1 / q)))
    s, e = r_as_tl(q, 5, 2)
    rebuilt = SquareMatrix.identity(4, EXACT).scale(s) + E.scale(e)
    assert rebuilt.equals(as_operator(r_family(FamilyParams(q, 1 / q, 1), "cf", GroupElem3(5, 2, 1))))
