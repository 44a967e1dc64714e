"""Six-vertex matrices and their elementary invariants.

A six-vertex matrix acts on V (x) V, V = C^2, in the basis
e1e1, e1e2, e2e1, e2e2 as::

    [[a1,  0,  0,  0],
     [ 0, c1, b1,  0],
     [ 0, b2, c2,  0],
     [ 0,  0,  0, a2]]

Entries are stored in the order (a1, a2, b1, b2, c1, c2) everywhere in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Iterable, NamedTuple

from .exceptions import ModeError, NotInSError, ParseError, SingularMatrixError, StatisticsUndefinedError
from .matrices import SquareMatrix
from .scalars import (
    EXACT,
    FLOAT,
    GaussianRational,
    Scalar,
    ScalarMode,
    scalar_from_json,
    scalar_to_json,
)

__all__ = [
    "ENTRY_NAMES",
    "SixVertexMatrix",
    "DualAuxiliaries",
    "DeltaPair",
    "ClassFlags",
    "identity_like",
    "determinant",
    "dual_auxiliaries",
    "dual",
    "inverse",
    "delta",
    "delta_simplified",
    "classify",
    "projective_eq",
    "projective_residual",
    "as_operator",
    "from_operator",
    "in_S",
    "in_S_times",
    "is_identity_pattern",
    "normalized",
    "matrix_to_json",
    "matrix_from_json",
]

ENTRY_NAMES = ("a1", "a2", "b1", "b2", "c1", "c2")


def _infer_mode(values) -> ScalarMode:
    has_exact = any(isinstance(v, (GaussianRational, int, Fraction, str)) for v in values)
    has_float = any(isinstance(v, (float, complex)) for v in values)
    if has_exact and has_float:
        if any(isinstance(v, GaussianRational) for v in values):
            raise ModeError("six-vertex entries mix exact and floating-point scalars")
        return FLOAT
    return FLOAT if has_float else EXACT


class SixVertexMatrix:
    """The six Boltzmann weights (a1, a2, b1, b2, c1, c2), all in one scalar mode."""

    __slots__ = ENTRY_NAMES + ("mode",)

    def __init__(self, a1, a2, b1, b2, c1, c2, mode: ScalarMode | None = None):
        raw = (a1, a2, b1, b2, c1, c2)
        if mode is None:
            mode = _infer_mode(raw)
        for name, value in zip(ENTRY_NAMES, raw):
            object.__setattr__(self, name, mode.coerce(value))
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("SixVertexMatrix is immutable")

    @classmethod
    def from_entries(cls, entries: Iterable, mode: ScalarMode | None = None) -> "SixVertexMatrix":
        return cls(*entries, mode=mode)

    @property
    def entries(self) -> tuple:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    def scale(self, k) -> "SixVertexMatrix":
        k = self.mode.coerce(k)
        return SixVertexMatrix(*(k * x for x in self.entries), mode=self.mode)

    def __rmul__(self, k):
        return self.scale(k)

    def with_mode(self, mode: ScalarMode) -> "SixVertexMatrix":
        """Same matrix under another tolerance, or converted exact -> float."""
        if mode.exact and not self.mode.exact:
            raise ModeError("cannot convert a float matrix to exact mode")
        entries = self.entries if mode.exact == self.mode.exact else [complex(x) for x in self.entries]
        return SixVertexMatrix(*entries, mode=mode)

    def __eq__(self, other):
        if not isinstance(other, SixVertexMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        body = ", ".join(str(x) for x in self.entries)
        return f"SixVertexMatrix({body})"


class DualAuxiliaries(NamedTuple):
    P: Scalar
    a1_star: Scalar
    a2_star: Scalar


class DeltaPair(NamedTuple):
    d1: Scalar
    d2: Scalar

    def equals(self, other: "DeltaPair", mode: ScalarMode) -> bool:
        return mode.eq(self.d1, other.d1) and mode.eq(self.d2, other.d2)

    def is_zero(self, mode: ScalarMode) -> bool:
        return mode.is_zero(self.d1) and mode.is_zero(self.d2)


@dataclass(frozen=True)
class ClassFlags:
    diagonal: bool
    five_vertex: bool
    free_fermionic: bool
    non_free_fermionic: bool
    constant_field: bool
    non_constant_field: bool
    field_free: bool
    degenerate: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def names(self) -> list[str]:
        return [k for k, v in asdict(self).items() if v]


def identity_like(mode: ScalarMode = EXACT) -> SixVertexMatrix:
    one, zero = mode.one(), mode.zero()
    return SixVertexMatrix(one, one, zero, zero, one, one, mode=mode)


def determinant(u: SixVertexMatrix) -> Scalar:
    return u.a1 * u.a2 * (u.c1 * u.c2 - u.b1 * u.b2)


def in_S(u: SixVertexMatrix) -> bool:
    u = normalized(u)[0]
    z = u.mode.is_zero
    return not (z(u.c1) or z(u.c2) or z(u.a1) or z(u.a2) or z(u.c1 * u.c2 - u.b1 * u.b2))


def in_S_times(u: SixVertexMatrix) -> bool:
    u = normalized(u)[0]
    return in_S(u) and not (u.mode.is_zero(u.b1) or u.mode.is_zero(u.b2))


def dual_auxiliaries(u: SixVertexMatrix) -> DualAuxiliaries:
    """P = c1 c2 - b1 b2 together with a1* = P/a1 and a2* = P/a2."""
    if u.mode.is_zero(u.a1) or u.mode.is_zero(u.a2):
        vanishing = [n for n in ("a1", "a2") if u.mode.is_zero(getattr(u, n))]
        raise NotInSError("dual needs a1 and a2 nonzero", vanishing=vanishing)
    P = u.c1 * u.c2 - u.b1 * u.b2
    return DualAuxiliaries(P, P / u.a1, P / u.a2)


def dual(u: SixVertexMatrix) -> SixVertexMatrix:
    """The rescaled inverse ``u* = (c1 c2 - b1 b2) u^-1``.

    Entrywise ``(a1*, a2*, -b1, -b2, c2, c1)``, so ``u @ u* = P * I``.
    """
    _, a1s, a2s = dual_auxiliaries(u)
    return SixVertexMatrix(a1s, a2s, -u.b1, -u.b2, u.c2, u.c1, mode=u.mode)


def inverse(u: SixVertexMatrix) -> SixVertexMatrix:
    z = u.mode.is_zero
    P = u.c1 * u.c2 - u.b1 * u.b2
    if z(u.a1) or z(u.a2) or z(P):
        raise SingularMatrixError(f"{u!r} is singular")
    return SixVertexMatrix(1 / u.a1, 1 / u.a2, -u.b1 / P, -u.b2 / P, u.c2 / P, u.c1 / P, mode=u.mode)


def delta(u: SixVertexMatrix) -> DeltaPair:
    """The statistics (Delta1, Delta2); both are invariant under rescaling ``u``."""
    u = normalized(u)[0]
    z = u.mode.is_zero
    if z(u.b1) or z(u.b2):
        raise StatisticsUndefinedError("Delta statistics need b1 and b2 nonzero")
    N = u.a1 * u.a2 + u.b1 * u.b2 - u.c1 * u.c2
    d1 = N / (2 * u.a1 * u.b1)
    d2 = N / (2 * u.a2 * u.b2)
    if u.mode.exact:
        _, a1s, a2s = dual_auxiliaries(u)
        assert d1 == (u.a2 - a1s) / (2 * u.b1)
        assert d2 == (u.a1 - a2s) / (2 * u.b2)
    return DeltaPair(d1, d2)


def delta_simplified(u: SixVertexMatrix, kind: str) -> Scalar:
    """``ff``: (a1 - a2)/(2 b1); ``cf``: (a1 - a1*)/(2 b1)."""
    if u.mode.is_zero(u.b1):
        raise StatisticsUndefinedError("simplified statistics need b1 nonzero")
    if kind == "ff":
        return (u.a1 - u.a2) / (2 * u.b1)
    if kind == "cf":
        return (u.a1 - dual_auxiliaries(u).a1_star) / (2 * u.b1)
    raise ValueError(f"kind must be 'ff' or 'cf', not {kind!r}")


def classify(u: SixVertexMatrix) -> ClassFlags:
    u = normalized(u)[0]
    eq, z = u.mode.eq, u.mode.is_zero
    b1_zero, b2_zero = z(u.b1), z(u.b2)
    ff = eq(u.a1 * u.a2 + u.b1 * u.b2, u.c1 * u.c2)
    cf = eq(u.a1, u.a2)
    invertible_a = not (z(u.a1) or z(u.a2))
    if invertible_a:
        _, a1s, a2s = dual_auxiliaries(u)
        nff = not eq(a2s, u.a1) and not eq(a1s, u.a2)
        degenerate = cf and eq(u.a1, a1s) and eq(u.a1, a2s)
    else:
        nff = False
        degenerate = False
    return ClassFlags(
        diagonal=b1_zero and b2_zero,
        five_vertex=b1_zero != b2_zero,
        free_fermionic=ff,
        non_free_fermionic=nff,
        constant_field=cf,
        non_constant_field=not cf,
        field_free=cf and eq(u.b1, u.b2) and eq(u.c1, u.c2),
        degenerate=degenerate,
    )


def normalized(u: SixVertexMatrix) -> tuple[SixVertexMatrix, Scalar]:
    """``(v, s)`` with ``u = s * v``; float matrices get largest entry modulus 1.

    Tolerance checks on ``v`` are then independent of the overall scale of
    ``u``. Exact matrices come back unchanged with ``s = 1``.
    """
    if u.mode.exact:
        return u, u.mode.one()
    s = max(u.entries, key=abs)
    if not s:
        return u, u.mode.one()
    return SixVertexMatrix(*(x / s for x in u.entries), mode=u.mode), s


def _normalized(u: SixVertexMatrix):
    if u.mode.exact:
        return u.entries
    big = max(u.entries, key=abs)
    if not big:
        return u.entries
    return tuple(x / big for x in u.entries)


def projective_eq(u: SixVertexMatrix, v: SixVertexMatrix) -> bool:
    """True iff ``u = k v`` for some nonzero scalar ``k``.

    Decided by cross-multiplication, so no entry is ever divided by another.
    Float matrices are first normalized by their largest entry so the
    tolerance is relative to the matrix scale.
    """
    if u.mode.exact != v.mode.exact:
        raise ModeError("cannot compare matrices from different scalar modes")
    mode = u.mode
    x, y = _normalized(u), _normalized(v)
    if [mode.is_zero(e) for e in x] != [mode.is_zero(e) for e in y]:
        return False
    if all(mode.is_zero(e) for e in x):
        return False
    for i in range(6):
        for j in range(i + 1, 6):
            if not mode.eq(x[i] * y[j], x[j] * y[i]):
                return False
    return True


def projective_residual(u: SixVertexMatrix, v: SixVertexMatrix) -> float:
    """Largest cross-multiplication mismatch after normalizing both matrices to unit max entry."""
    x = [complex(e) for e in u.entries]
    y = [complex(e) for e in v.entries]
    mx, my = max(map(abs, x)), max(map(abs, y))
    if not mx or not my:
        return float("inf")
    x = [e / mx for e in x]
    y = [e / my for e in y]
    return max(abs(x[i] * y[j] - x[j] * y[i]) for i in range(6) for j in range(6))


def is_identity_pattern(u: SixVertexMatrix) -> bool:
    """Whether ``u`` is a nonzero multiple of the identity."""
    u = normalized(u)[0]
    eq, z = u.mode.eq, u.mode.is_zero
    return (
        z(u.b1)
        and z(u.b2)
        and not z(u.a1)
        and eq(u.a1, u.a2)
        and eq(u.a1, u.c1)
        and eq(u.a1, u.c2)
    )


def as_operator(u: SixVertexMatrix) -> SquareMatrix:
    o = u.mode.zero()
    return SquareMatrix._raw(
        (
            (u.a1, o, o, o),
            (o, u.c1, u.b1, o),
            (o, u.b2, u.c2, o),
            (o, o, o, u.a2),
        ),
        u.mode,
    )


def from_operator(m: SquareMatrix) -> SixVertexMatrix:
    if m.n != 4:
        raise ValueError("six-vertex operators are 4x4")
    pattern = {(0, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 3)}
    for i in range(4):
        for j in range(4):
            if (i, j) not in pattern and not m.mode.is_zero(m[i, j]):
                raise ValueError(f"entry ({i}, {j}) lies outside the six-vertex pattern")
    return SixVertexMatrix(m[0, 0], m[3, 3], m[1, 2], m[2, 1], m[1, 1], m[2, 2], mode=m.mode)


def matrix_to_json(u: SixVertexMatrix) -> dict:
    out = {name: scalar_to_json(x) for name, x in zip(ENTRY_NAMES, u.entries)}
    out["mode"] = u.mode.kind
    return out


def _looks_float(value) -> bool:
    if isinstance(value, dict):
        return any(isinstance(p, float) for p in value.values())
    return isinstance(value, float)


def matrix_from_json(obj: dict, mode: ScalarMode | None = None) -> SixVertexMatrix:
    if not isinstance(obj, dict):
        raise ParseError(f"six-vertex matrix must be a JSON object, got {type(obj).__name__}")
    missing = [n for n in ENTRY_NAMES if n not in obj]
    if missing:
        raise ParseError(f"six-vertex matrix is missing {', '.join(missing)}")
    extra = set(obj) - set(ENTRY_NAMES) - {"mode"}
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}")
    if mode is None and "mode" in obj:
        kind = obj["mode"]
        if kind not in ("exact", "float"):
            raise ParseError(f"unknown mode {kind!r}")
        mode = EXACT if kind == "exact" else FLOAT
    if mode is None:
        mode = FLOAT if any(_looks_float(obj[n]) for n in ENTRY_NAMES) else EXACT
    return SixVertexMatrix(*(scalar_from_json(obj[n], mode) for n in ENTRY_NAMES), mode=mode)
