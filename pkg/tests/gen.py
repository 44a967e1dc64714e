"""Seeded random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from sixvertex import (
    FamilyParams,
    GaussianRational,
    GL2GL1Element,
    GroupElem3,
    SixVertexMatrix,
    in_S,
    in_S_times,
)


def rational(rng: random.Random, size: int = 12, nonzero: bool = True) -> GaussianRational:
    while True:
        num = rng.randint(-size, size)
        if num or not nonzero:
            return GaussianRational(Fraction(num, rng.randint(1, size)))


def gaussian(rng: random.Random, size: int = 12) -> GaussianRational:
    """Mostly real; every fourth value gets an imaginary part."""
    x = rational(rng, size)
    if rng.random() < 0.25:
        x = x + GaussianRational(0, rational(rng, size).re)
    return x if x else GaussianRational(1)


def matrix(rng: random.Random, size: int = 12) -> SixVertexMatrix:
    return SixVertexMatrix(*(gaussian(rng, size) for _ in range(6)))


def matrix_in_S(rng: random.Random) -> SixVertexMatrix:
    while True:
        u = matrix(rng)
        if in_S(u):
            return u


def matrix_in_S_times(rng: random.Random) -> SixVertexMatrix:
    while True:
        u = matrix(rng)
        if in_S_times(u):
            return u


def family_params(rng: random.Random) -> FamilyParams:
    while True:
        q1, q2 = rational(rng), rational(rng)
        if q1 != q2:
            return FamilyParams(q1, q2, rational(rng))


def group_elem(rng: random.Random) -> GroupElem3:
    return GroupElem3(rational(rng), rational(rng), rational(rng))


def gl2gl1(rng: random.Random) -> GL2GL1Element:
    while True:
        m = [rational(rng, nonzero=False) for _ in range(4)]
        if m[0] * m[3] - m[1] * m[2]:
            return GL2GL1Element(*m, rational(rng))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonzero_rationals = rationals.filter(bool)
exact_scalars = st.builds(GaussianRational, rationals, rationals)
nonzero_scalars = exact_scalars.filter(bool)
exact_matrices = st.builds(SixVertexMatrix, *([nonzero_scalars] * 6))
matrices_in_S = exact_matrices.filter(in_S)
matrices_in_S_times = exact_matrices.filter(in_S_times)
