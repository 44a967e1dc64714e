"""Parametrized families of six-vertex solutions.

* :func:`tau` sends GL2 x GL1 onto the free-fermionic matrices; it is a
  parametrized solution for the (non-commutative) group product.
* :func:`r_family` gives the two maximal commutative families, constant-field
  (``"cf"``) and free-fermionic (``"ff"``), over the group (C^x)^3 with
  componentwise multiplication. They differ only in ``a2``.
* Specializations: quantum-group R-matrices, five-vertex degenerations,
  Temperley-Lieb generators and the all-ones matrix counting alternating
  sign matrices.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .core import SixVertexMatrix, as_operator, identity_like
from .exceptions import NotInSError
from .matrices import SquareMatrix
from .scalars import EXACT, FLOAT, Scalar, ScalarMode, mode_of

__all__ = [
    "GL2GL1Element",
    "FamilyParams",
    "GroupElem3",
    "TLOperator",
    "tau",
    "r_family",
    "quantum_r",
    "five_vertex",
    "asm_matrix",
    "tl_e_matrix",
    "tl_generator",
    "r_as_tl",
    "MAX_TL_LENGTH",
]

MAX_TL_LENGTH = 6


def _mode_for(*values, mode: ScalarMode | None = None) -> ScalarMode:
    if mode is not None:
        return mode
    modes = {mode_of(v).exact for v in values}
    if len(modes) > 1:
        return FLOAT
    return EXACT if modes == {True} else FLOAT


@dataclass(frozen=True)
class GL2GL1Element:
    """An element ``[[m11, m12], [m21, m22]] x (c)`` of GL2 x GL1."""

    m11: Scalar
    m12: Scalar
    m21: Scalar
    m22: Scalar
    c: Scalar
    mode: ScalarMode | None = None

    def __post_init__(self):
        mode = _mode_for(self.m11, self.m12, self.m21, self.m22, self.c, mode=self.mode)
        for name in ("m11", "m12", "m21", "m22", "c"):
            object.__setattr__(self, name, mode.coerce(getattr(self, name)))
        object.__setattr__(self, "mode", mode)
        if mode.is_zero(self.m11 * self.m22 - self.m12 * self.m21):
            raise ValueError("GL2 part is singular")
        if mode.is_zero(self.c):
            raise ValueError("GL1 part must be nonzero")

    def __mul__(self, other: "GL2GL1Element") -> "GL2GL1Element":
        return GL2GL1Element(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            self.c * other.c,
            mode=self.mode,
        )


@dataclass(frozen=True)
class FamilyParams:
    """Global parameters ``q1, q2`` and twist ``beta`` of the commutative families."""

    q1: Scalar
    q2: Scalar
    beta: Scalar
    mode: ScalarMode | None = None

    def __post_init__(self):
        mode = _mode_for(self.q1, self.q2, self.beta, mode=self.mode)
        for name in ("q1", "q2", "beta"):
            object.__setattr__(self, name, mode.coerce(getattr(self, name)))
        object.__setattr__(self, "mode", mode)
        if mode.eq(self.q1, self.q2):
            raise ValueError("q1 = q2 kills both c-entries")
        if mode.is_zero(self.beta):
            raise ValueError("beta must be nonzero")


@dataclass(frozen=True)
class GroupElem3:
    """An element ``(z1, z2, w)`` of (C^x)^3; the product is componentwise."""

    z1: Scalar
    z2: Scalar
    w: Scalar
    mode: ScalarMode | None = None

    def __post_init__(self):
        mode = _mode_for(self.z1, self.z2, self.w, mode=self.mode)
        for name in ("z1", "z2", "w"):
            value = mode.coerce(getattr(self, name))
            if mode.is_zero(value):
                raise ValueError(f"{name} must be nonzero")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "mode", mode)

    def __mul__(self, other: "GroupElem3") -> "GroupElem3":
        return GroupElem3(self.z1 * other.z1, self.z2 * other.z2, self.w * other.w, mode=self.mode)


def tau(g: GL2GL1Element) -> SixVertexMatrix:
    """Free-fermionic matrix with a1 = m11, b2 = m12, b1 = -m21, a2 = m22, c1 = c.

    ``c2`` is fixed by the free-fermion relation a1 a2 + b1 b2 = c1 c2.
    """
    a1, b2, b1, a2, c1 = g.m11, g.m12, -g.m21, g.m22, g.c
    top = a1 * a2 + b1 * b2
    if g.mode.is_zero(top):
        raise NotInSError("a1*a2 + b1*b2 = 0, so c2 vanishes", vanishing=["c2"])
    return SixVertexMatrix(a1, a2, b1, b2, c1, top / c1, mode=g.mode)


def _r_entries(p: FamilyParams, kind: str, g: GroupElem3) -> SixVertexMatrix:
    if kind not in ("cf", "ff"):
        raise ValueError(f"kind must be 'cf' or 'ff', not {kind!r}")
    if p.mode.exact != g.mode.exact:
        raise ValueError("family parameters and group element use different scalar modes")
    mode = p.mode if not p.mode.exact else g.mode
    q1, q2, beta = p.q1, p.q2, p.beta
    z1, z2, w = g.z1, g.z2, g.w
    a1 = q1 * z1 - q2 * z2
    a2 = a1 if kind == "cf" else q1 * z2 - q2 * z1
    u = SixVertexMatrix(
        a1,
        a2,
        q1 * (z1 - z2) * beta,
        q2 * (z1 - z2) / beta,
        z1 * (q1 - q2) * w,
        z2 * (q1 - q2) / w,
        mode=mode,
    )
    return u


def r_family(p: FamilyParams, kind: str, g: GroupElem3) -> SixVertexMatrix:
    """The maximal commutative family member ``R^kind_{q1,q2;beta}(z1, z2; w)``."""
    u = _r_entries(p, kind, g)
    mode, z1, z2, w = u.mode, g.z1, g.z2, g.w
    vanishing = [n for n in ("a1", "a2", "c1", "c2") if mode.is_zero(getattr(u, n))]
    if mode.is_zero(u.c1 * u.c2 - u.b1 * u.b2):
        vanishing.append("c1*c2-b1*b2")
    if vanishing:
        raise NotInSError(f"R^{kind}{(z1, z2, w)} is not in S: {', '.join(vanishing)} vanish", vanishing)
    return u


def quantum_r(q: Scalar, z: Scalar, kind: str = "cf", mode: ScalarMode | None = None) -> SixVertexMatrix:
    """R-matrix of the evaluation modules: U_q(sl2^) for ``cf``, U_q(sl(1|1)^) for ``ff``."""
    mode = _mode_for(q, z, mode=mode)
    q, z = mode.coerce(q), mode.coerce(z)
    return r_family(FamilyParams(q, 1 / q, 1, mode=mode), kind, GroupElem3(z, 1 / z, 1, mode=mode))


def five_vertex(kind: str, which: str, z1, z2, w=1, beta=1, mode: ScalarMode | None = None) -> SixVertexMatrix:
    """Rescaled degeneration of the commutative families at ``q1 = 0`` or ``q2 = 0``.

    ``which`` names the b-entry that actually vanishes: the upper
    off-diagonal is ``b1`` and the lower one ``b2``.

    ``b2_zero`` (from ``q2 = 0``)::

        a1 = z1, b1 = (z1 - z2) beta, b2 = 0, c1 = z1 w, c2 = z2 / w,
        a2 = z1 (cf) or z2 (ff)

    ``b1_zero`` (from ``q1 = 0``)::

        a1 = z2, b1 = 0, b2 = (z1 - z2) beta, c1 = z1 w, c2 = z2 / w,
        a2 = z2 (cf) or z1 (ff)
    """
    if kind not in ("cf", "ff"):
        raise ValueError(f"kind must be 'cf' or 'ff', not {kind!r}")
    mode = _mode_for(z1, z2, w, beta, mode=mode)
    z1, z2, w, beta = (mode.coerce(x) for x in (z1, z2, w, beta))
    for name, x in (("z1", z1), ("z2", z2), ("w", w), ("beta", beta)):
        if mode.is_zero(x):
            raise ValueError(f"{name} must be nonzero")
    zero = mode.zero()
    off = (z1 - z2) * beta
    if which == "b2_zero":
        return SixVertexMatrix(z1, z1 if kind == "cf" else z2, off, zero, z1 * w, z2 / w, mode=mode)
    if which == "b1_zero":
        return SixVertexMatrix(z2, z2 if kind == "cf" else z1, zero, off, z1 * w, z2 / w, mode=mode)
    raise ValueError(f"which must be 'b1_zero' or 'b2_zero', not {which!r}")


def asm_matrix(eps: float = FLOAT.eps) -> SixVertexMatrix:
    """R^cf with q1 = q, q2 = 1/q, beta = 1/q, z1 = z, z2 = 1/z, w = 1/z at q = z = exp(i pi/3).

    Every entry equals i*sqrt(3), so the result is projectively the all-ones
    matrix used to count alternating sign matrices. That matrix is singular
    (c1 c2 = b1 b2), so it is built without the membership check.
    """
    mode = ScalarMode.float_mode(eps)
    zeta = cmath.exp(1j * cmath.pi / 3)
    params = FamilyParams(zeta, 1 / zeta, 1 / zeta, mode=mode)
    return _r_entries(params, "cf", GroupElem3(zeta, 1 / zeta, 1 / zeta, mode=mode))


def tl_e_matrix(q: Scalar, mode: ScalarMode | None = None) -> SquareMatrix:
    """The 4x4 Temperley-Lieb generator ``E`` with parameter ``q``."""
    mode = _mode_for(q, mode=mode)
    q = mode.coerce(q)
    if mode.is_zero(q):
        raise ValueError("q must be nonzero")
    o = mode.zero()
    qi = 1 / q
    return SquareMatrix._raw(
        ((o, o, o, o), (o, -qi, q, o), (o, qi, -q, o), (o, o, o, o)),
        mode,
    )


@dataclass(frozen=True)
class TLOperator:
    """``E_k`` on V^(x)n: ``E`` on tensor slots (k, k+1), identity elsewhere."""

    n: int
    k: int
    q: Scalar
    matrix: SquareMatrix


def tl_generator(q: Scalar, n: int, k: int, max_length: int = MAX_TL_LENGTH) -> TLOperator:
    if not 2 <= n <= max_length:
        raise ValueError(f"tensor length must lie in [2, {max_length}], got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"position must lie in [1, {n - 1}], got {k}")
    mode = _mode_for(q)
    E = tl_e_matrix(q, mode)
    left = SquareMatrix.identity(2 ** (k - 1), mode)
    right = SquareMatrix.identity(2 ** (n - k - 1), mode)
    return TLOperator(n, k, mode.coerce(q), left.kron(E).kron(right))


def r_as_tl(q: Scalar, z1: Scalar, z2: Scalar) -> tuple[Scalar, Scalar]:
    """Coefficients ``(s, e)`` with ``R^cf_q(z1, z2) = s*I + e*E`` (beta = w = 1)."""
    mode = _mode_for(q, z1, z2)
    q, z1, z2 = (mode.coerce(x) for x in (q, z1, z2))
    scalar_part = q * z1 - z2 / q
    e_part = z1 - z2
    R = r_family(FamilyParams(q, 1 / q, 1, mode=mode), "cf", GroupElem3(z1, z2, 1, mode=mode))
    rebuilt = as_operator(identity_like(mode)).scale(scalar_part) + tl_e_matrix(q, mode).scale(e_part)
    if mode.exact:
        assert rebuilt.equals(as_operator(R), mode)
    return scalar_part, e_part
