"""Yang-Baxter equation for six-vertex matrices.

The commutator ``[[u, w, v]]`` is the 8x8 operator

    (u x 1)(1 x w)(v x 1) - (1 x v)(w x 1)(1 x u)

on V (x) V (x) V with basis e_{i1} e_{i2} e_{i3} in lexicographic order;
``x (x) 1`` acts on tensor slots (1, 2) and ``1 (x) x`` on slots (2, 3).
Its fourteen nonzero entries reduce to thirteen distinct scalar equations,
which :func:`component_residuals` evaluates directly as an independent
check of the operator computation.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    SixVertexMatrix,
    as_operator,
    dual_auxiliaries,
    in_S,
    inverse,
    normalized,
    projective_eq,
)
from .exceptions import DegenerateProductError, ModeError, NotInSError
from .matrices import SquareMatrix
from .scalars import Scalar, ScalarMode

__all__ = [
    "YBTriple",
    "SolveConditions",
    "yb_sides",
    "yb_commutator",
    "component_residuals",
    "is_yb_solution",
    "solve_conditions",
    "solve_w",
    "solve_u",
    "solve_v",
    "explicit_u",
    "explicit_v",
    "is_commutative_pair",
    "equivalent_forms",
    "solution_space",
]


class YBTriple(NamedTuple):
    u: SixVertexMatrix
    w: SixVertexMatrix
    v: SixVertexMatrix


class SolveConditions(NamedTuple):
    cond1_lhs: Scalar
    cond1_rhs: Scalar
    cond2_lhs: Scalar
    cond2_rhs: Scalar
    satisfied: bool


def _common_mode(*ms: SixVertexMatrix) -> ScalarMode:
    mode = ms[0].mode
    for m in ms[1:]:
        if m.mode.exact != mode.exact:
            raise ModeError("six-vertex matrices belong to different scalar modes")
        if not mode.exact and m.mode.eps > mode.eps:
            mode = m.mode
    return mode


def yb_sides(u: SixVertexMatrix, w: SixVertexMatrix, v: SixVertexMatrix) -> tuple[SquareMatrix, SquareMatrix]:
    """The two 8x8 products whose difference is the Yang-Baxter commutator."""
    mode = _common_mode(u, w, v)
    one = SquareMatrix.identity(2, mode)
    U, W, V = as_operator(u), as_operator(w), as_operator(v)
    left = U.kron(one) @ one.kron(W) @ V.kron(one)
    right = one.kron(V) @ W.kron(one) @ one.kron(U)
    return left, right


def yb_commutator(u: SixVertexMatrix, w: SixVertexMatrix, v: SixVertexMatrix) -> SquareMatrix:
    left, right = yb_sides(u, w, v)
    return left - right


def _residual_sides(u, w, v):
    a1u, a2u, b1u, b2u, c1u, c2u = u.entries
    a1w, a2w, b1w, b2w, c1w, c2w = w.entries
    a1v, a2v, b1v, b2v, c1v, c2v = v.entries
    return [
        (c1w * c2u * c2v, c1u * c1v * c2w),
        (a1w * c1u * c1v + b1v * b2u * c1w, a1u * a1v * c1w),
        (a1w * b1u * c1v + b1v * c1w * c2u, a1u * b1w * c1v),
        (a1w * b2v * c1u + b2u * c1w * c2v, a1v * b2w * c1u),
        (a1w * b1u * c2v + b1v * c1u * c2w, a1u * b1w * c2v),
        (a2w * c1u * c1v + b1u * b2v * c1w, a2u * a2v * c1w),
        (a2w * b1v * c1u + b1u * c1w * c2v, a2v * b1w * c1u),
        (a1w * b2v * c2u + b2u * c1v * c2w, a1v * b2w * c2u),
        (a1w * c2u * c2v + b1v * b2u * c2w, a1u * a1v * c2w),
        (a2w * b2u * c1v + b2v * c1w * c2u, a2u * b2w * c1v),
        (a2w * b1v * c2u + b1u * c1v * c2w, a2v * b1w * c2u),
        (a2w * b2u * c2v + b2v * c1u * c2w, a2u * b2w * c2v),
        (a2w * c2u * c2v + b1u * b2v * c2w, a2u * a2v * c2w),
    ]


def component_residuals(u: SixVertexMatrix, w: SixVertexMatrix, v: SixVertexMatrix) -> list[Scalar]:
    """LHS - RHS of the thirteen scalar component equations, in their standard order."""
    _common_mode(u, w, v)
    return [lhs - rhs for lhs, rhs in _residual_sides(u, w, v)]


def is_yb_solution(u: SixVertexMatrix, w: SixVertexMatrix, v: SixVertexMatrix) -> bool:
    mode = _common_mode(u, w, v)
    left, right = yb_sides(u, w, v)
    result = left.equals(right, mode)
    # Cross-checks throughout run in exact mode only: rounding can split them near the tolerance.
    if mode.exact:
        assert result == all(mode.eq(lhs, rhs) for lhs, rhs in _residual_sides(u, w, v))
    return result


def _require_S(*named):
    for name, m in named:
        if not in_S(m):
            raise NotInSError(f"{name} = {m!r} is not in S (needs c1, c2, a1, a2 and det nonzero)")


def solve_conditions(u: SixVertexMatrix, v: SixVertexMatrix) -> SolveConditions:
    """Consistency conditions under which ``[[u, w, v]] = 0`` has a solution ``w``.

    (a1(v) - a2*(v)) b1(u) = (a2(u) - a1*(u)) b1(v)
    (a1(u) - a2*(u)) b2(v) = (a2(v) - a1*(v)) b2(u)
    """
    mode = _common_mode(u, v)
    # Each condition is homogeneous in u and in v, so float inputs are scaled to unit size first.
    u, v = normalized(u)[0], normalized(v)[0]
    _, a1s_u, a2s_u = dual_auxiliaries(u)
    _, a1s_v, a2s_v = dual_auxiliaries(v)
    l1 = (v.a1 - a2s_v) * u.b1
    r1 = (u.a2 - a1s_u) * v.b1
    l2 = (u.a1 - a2s_u) * v.b2
    r2 = (v.a2 - a1s_v) * u.b2
    return SolveConditions(l1, r1, l2, r2, mode.eq(l1, r1) and mode.eq(l2, r2))


def _check_product(w: SixVertexMatrix) -> SixVertexMatrix:
    z = w.mode.is_zero
    w = normalized(w)[0]
    vanishing = [n for n in ("c1", "c2", "a1", "a2") if z(getattr(w, n))]
    if z(w.c1 * w.c2 - w.b1 * w.b2):
        vanishing.append("c1*c2-b1*b2")
    if vanishing:
        raise DegenerateProductError(
            f"solution {w!r} leaves S: {', '.join(vanishing)} vanish", vanishing=vanishing
        )
    return w


def solve_w(u: SixVertexMatrix, v: SixVertexMatrix) -> SixVertexMatrix | None:
    """The middle matrix ``w`` with ``[[u, w, v]] = 0``, or ``None`` if no ``w`` exists.

    The representative is fixed by ``c1(w) = c1(u) c1(v)`` and
    ``c2(w) = c2(u) c2(v)``; any other solution is a scalar multiple.
    Raises :class:`DegenerateProductError` when the solution exists but is
    singular.
    """
    mode = _common_mode(u, v)
    _require_S(("u", u), ("v", v))
    if not solve_conditions(u, v).satisfied:
        return None
    # w is bilinear in (u, v): solve at unit scale, then restore the representative.
    (u, su), (v, sv) = normalized(u), normalized(v)
    _, a1s_u, a2s_u = dual_auxiliaries(u)
    _, a1s_v, a2s_v = dual_auxiliaries(v)
    b1 = a1s_u * v.b1 + v.a1 * u.b1
    b2 = a1s_v * u.b2 + u.a1 * v.b2
    if mode.exact:
        assert b1 == a2s_v * u.b1 + u.a2 * v.b1
        assert b2 == a2s_u * v.b2 + v.a2 * u.b2
    w = SixVertexMatrix(
        u.a1 * v.a1 - v.b1 * u.b2,
        u.a2 * v.a2 - u.b1 * v.b2,
        b1,
        b2,
        u.c1 * v.c1,
        u.c2 * v.c2,
        mode=mode,
    )
    _check_product(w)
    return w if mode.exact else w.scale(su * sv)


def explicit_u(w: SixVertexMatrix, v: SixVertexMatrix) -> SixVertexMatrix:
    """Closed-form ``u`` with ``[[u, w, v]] = 0``, written out entry by entry."""
    _, a1s_v, a2s_v = dual_auxiliaries(v)
    return SixVertexMatrix(
        w.a1 * a1s_v + v.b1 * w.b2,
        w.a2 * a2s_v + w.b1 * v.b2,
        w.b1 * v.a2 - v.b1 * w.a2,
        v.a1 * w.b2 - w.a1 * v.b2,
        w.c1 * v.c2,
        v.c1 * w.c2,
        mode=_common_mode(w, v),
    )


def explicit_v(u: SixVertexMatrix, w: SixVertexMatrix) -> SixVertexMatrix:
    """Closed-form ``v`` with ``[[u, w, v]] = 0``, written out entry by entry."""
    _, a1s_u, a2s_u = dual_auxiliaries(u)
    _, a1s_w, a2s_w = dual_auxiliaries(w)
    return SixVertexMatrix(
        w.a1 * a1s_u + w.b1 * u.b2,
        w.a2 * a2s_u + u.b1 * w.b2,
        w.b1 * a2s_u - u.b1 * a2s_w,
        u.a2 * w.b2 - w.a2 * u.b2,
        w.c1 * u.c2,
        u.c1 * w.c2,
        mode=_common_mode(u, w),
    )


def solve_u(w: SixVertexMatrix, v: SixVertexMatrix) -> SixVertexMatrix | None:
    """Solve ``[[u, w, v]] = 0`` for ``u``, via ``[[w, u, v^-1]] = 0``."""
    _require_S(("w", w), ("v", v))
    u = solve_w(w, inverse(v))
    if u is not None and u.mode.exact:
        assert projective_eq(u, explicit_u(w, v))
    return u


def solve_v(u: SixVertexMatrix, w: SixVertexMatrix) -> SixVertexMatrix | None:
    """Solve ``[[u, w, v]] = 0`` for ``v``, via ``[[u^-1, v, w]] = 0``."""
    _require_S(("u", u), ("w", w))
    v = solve_w(inverse(u), w)
    if v is not None and v.mode.exact:
        assert projective_eq(v, explicit_v(u, w))
    return v


def is_commutative_pair(u: SixVertexMatrix, v: SixVertexMatrix) -> bool:
    """Whether both ``[[u, w, v]] = 0`` and ``[[v, w, u]] = 0`` can hold with the same ``w``."""
    mode = _common_mode(u, v)
    _, a1s_u, a2s_u = dual_auxiliaries(u)
    _, a1s_v, a2s_v = dual_auxiliaries(v)
    return (
        mode.eq(u.b1 * v.b2, v.b1 * u.b2)
        and mode.eq((u.a1 - a1s_u) * v.b1, (v.a1 - a1s_v) * u.b1)
        and mode.eq((u.a2 - a2s_u) * v.b2, (v.a2 - a2s_v) * u.b2)
    )


def equivalent_forms(u: SixVertexMatrix, w: SixVertexMatrix, v: SixVertexMatrix) -> list[YBTriple]:
    """Six triples whose Yang-Baxter equations are all equivalent to ``[[u, w, v]] = 0``."""
    ui, wi, vi = inverse(u), inverse(w), inverse(v)
    return [
        YBTriple(u, w, v),
        YBTriple(w, u, vi),
        YBTriple(ui, v, w),
        YBTriple(vi, wi, ui),
        YBTriple(v, ui, wi),
        YBTriple(wi, vi, u),
    ]


def _unit(k: int, mode: ScalarMode) -> SixVertexMatrix:
    one, zero = mode.one(), mode.zero()
    return SixVertexMatrix(*(one if i == k else zero for i in range(6)), mode=mode)


def solution_space(u: SixVertexMatrix, v: SixVertexMatrix) -> list[SixVertexMatrix]:
    """Basis of every ``w`` (as six entries) solving ``[[u, w, v]] = 0``, by brute force.

    The residuals are linear in ``w``, so column ``k`` of the 13x6 system is
    the residual vector at the ``k``-th unit matrix. The null space is found
    by Gauss-Jordan elimination; no closed-form solution is consulted.
    """
    mode = _common_mode(u, v)
    cols = [component_residuals(u, _unit(k, mode), v) for k in range(6)]
    rows = [[cols[k][i] for k in range(6)] for i in range(13)]
    return [SixVertexMatrix(*vec, mode=mode) for vec in _nullspace(rows, mode)]


def _nullspace(rows, mode: ScalarMode):
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        candidates = [i for i in range(r, len(rows)) if not mode.is_zero(rows[i][c])]
        if not candidates:
            continue
        p = max(candidates, key=lambda i: abs(rows[i][c])) if not mode.exact else candidates[0]
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [mode.zero()] * ncols
        vec[fcol] = mode.one()
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fcol]
        basis.append(vec)
    return basis

