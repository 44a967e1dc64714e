"""The non-free-fermionic Yang-Baxter groupoid.

Objects are pairs of statistics ``(d1, d2)``. A morphism is a projective
matrix ``u`` in S^x with ``Delta(u) != (0, 0)``; it runs from
``Delta(u^-1)`` to ``Delta(u)``, so ``u * v`` is defined exactly when
``Delta(u) = Delta(v^-1)`` and equals the Yang-Baxter composition
``w`` with ``[[u, w, v]] = 0``. A formal identity is adjoined at every
object, and ``u * u^-1`` lands on it.

Samplers and fuzzers here produce evidence for associativity, both inside a
single commutative family (exactly) and across vertex groups (in floating
point, since the cross-vertex construction needs square roots).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import (
    DeltaPair,
    SixVertexMatrix,
    classify,
    delta,
    in_S_times,
    inverse,
    is_identity_pattern,
    matrix_to_json,
    normalized,
    projective_eq,
    projective_residual,
)
from .exceptions import DegenerateProductError, NotInSError, SingularMatrixError, SixVertexError
from .families import FamilyParams, GroupElem3, r_family
from .scalars import EXACT, GaussianRational, ScalarMode, scalar_to_json
from .ybe import solve_v, solve_w

__all__ = [
    "GroupoidElement",
    "element",
    "identity",
    "g_inverse",
    "g_compose",
    "g_eq",
    "Failure",
    "FuzzReport",
    "axiom_suite",
    "sample_composable",
    "associativity_fuzz",
    "SamplingError",
]


class SamplingError(SixVertexError, RuntimeError):
    """The sampler could not find a nondegenerate instance within its retry budget."""


@dataclass(frozen=True)
class GroupoidElement:
    """Either a matrix element (``matrix`` set) or the formal identity at ``delta``."""

    matrix: SixVertexMatrix | None
    delta: DeltaPair
    mode: ScalarMode = EXACT

    @property
    def is_identity(self) -> bool:
        return self.matrix is None

    def source(self) -> DeltaPair:
        """The object a left factor must match: ``Delta(u^-1)``."""
        if self.matrix is None:
            return self.delta
        return delta(inverse(self.matrix))

    def target(self) -> DeltaPair:
        return self.delta

    def __repr__(self):
        if self.matrix is None:
            return f"Identity({self.delta.d1}, {self.delta.d2})"
        return f"Element({', '.join(map(str, self.matrix.entries))})"

    def to_json(self) -> dict:
        d = {"delta": [scalar_to_json(self.delta.d1), scalar_to_json(self.delta.d2)]}
        if self.matrix is None:
            d["identity"] = True
        else:
            d["matrix"] = matrix_to_json(self.matrix)
        return d


def element(m: SixVertexMatrix) -> GroupoidElement:
    """Wrap a non-free-fermionic matrix of S^x; anything else is rejected."""
    if not in_S_times(m):
        raise NotInSError(f"{m!r} is not in S^x")
    d = delta(m)
    if d.is_zero(m.mode):
        raise NotInSError(f"{m!r} is free-fermionic and lies outside the groupoid")
    return GroupoidElement(m, d, m.mode)


def identity(d: DeltaPair | Sequence, mode: ScalarMode = EXACT) -> GroupoidElement:
    d1, d2 = (mode.coerce(x) for x in d)
    return GroupoidElement(None, DeltaPair(d1, d2), mode)


def g_inverse(x: GroupoidElement) -> GroupoidElement:
    if x.matrix is None:
        return x
    m = inverse(x.matrix)
    return GroupoidElement(m, delta(m), x.mode)


def g_compose(x: GroupoidElement, y: GroupoidElement) -> GroupoidElement | None:
    """``x * y``, or ``None`` when the objects do not match.

    Raises :class:`DegenerateProductError` if the objects match but the
    Yang-Baxter composition leaves the groupoid without being a multiple of
    the identity.
    """
    mode = _mode(x, y)
    if x.matrix is None and y.matrix is None:
        return x if x.delta.equals(y.delta, mode) else None
    if x.matrix is None:
        return y if x.delta.equals(y.source(), mode) else None
    if y.matrix is None:
        return x if y.delta.equals(x.delta, mode) else None
    if not x.delta.equals(y.source(), mode):
        return None
    w = solve_w(x.matrix, y.matrix)
    if w is None:
        return None
    if is_identity_pattern(w):
        return GroupoidElement(None, y.delta, mode)
    if not in_S_times(w):
        unit = normalized(w)[0]
        vanishing = [n for n in ("b1", "b2") if unit.mode.is_zero(getattr(unit, n))]
        raise DegenerateProductError(
            f"{x!r} * {y!r} = {w!r} is not in S^x ({', '.join(vanishing)} vanish)", vanishing
        )
    d = delta(w)
    if d.is_zero(mode):
        raise DegenerateProductError(f"{x!r} * {y!r} = {w!r} is free-fermionic", ["Delta"])
    return GroupoidElement(w, d, mode)


def g_eq(x: GroupoidElement, y: GroupoidElement) -> bool:
    if x.is_identity != y.is_identity:
        return False
    if x.matrix is None:
        return x.delta.equals(y.delta, _mode(x, y))
    return projective_eq(x.matrix, y.matrix)


def _mode(x: GroupoidElement, y: GroupoidElement) -> ScalarMode:
    if x.mode.exact != y.mode.exact:
        raise TypeError("groupoid elements belong to different scalar modes")
    if x.mode.exact:
        return x.mode
    return x.mode if x.mode.eps >= y.mode.eps else y.mode


# Reports ---------------------------------------------------------------------


@dataclass
class Failure:
    seed: int
    trial: int
    chain: list
    check: str

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trial": self.trial,
            "triple": [x.to_json() if isinstance(x, GroupoidElement) else x for x in self.chain],
            "check": self.check,
        }


@dataclass
class FuzzReport:
    trials: int = 0
    passes: int = 0
    failures: list[Failure] = field(default_factory=list)
    max_residual: float = 0.0

    @property
    def degenerate(self) -> int:
        """Failed trials in which some composition left S^x without hitting an identity."""
        return sum("degenerate" in f.check for f in self.failures)

    def record(self, ok: bool, failure: Failure | None = None) -> None:
        self.trials += 1
        if ok:
            self.passes += 1
        else:
            self.failures.append(failure)

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "passes": self.passes,
            "failures": [f.to_json() for f in self.failures],
            "degenerate": self.degenerate,
            "max_residual": self.max_residual,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _residual(x: GroupoidElement, y: GroupoidElement) -> float:
    if x.matrix is None or y.matrix is None or x.mode.exact:
        return 0.0
    return projective_residual(x.matrix, y.matrix)


class _Checker:
    """Collects named check outcomes for one trial."""

    def __init__(self):
        self.failed: list[str] = []
        self.residual = 0.0

    def same(self, name, a, b):
        if a is None or b is None:
            self.failed.append(f"{name}: undefined")
            return
        if not g_eq(a, b):
            self.failed.append(name)
        self.residual = max(self.residual, _residual(a, b))

    def defined(self, name, value):
        if value is None:
            self.failed.append(f"{name}: undefined")
        return value

    def compose(self, name, x, y):
        if x is None or y is None:
            self.failed.append(f"{name}: operand undefined")
            return None
        try:
            return self.defined(name, g_compose(x, y))
        except DegenerateProductError as exc:
            self.failed.append(f"{name}: degenerate product ({', '.join(exc.vanishing)})")
            return None


def _check_pair(c: _Checker, u: GroupoidElement, v: GroupoidElement) -> None:
    try:
        uv = g_compose(u, v)
    except DegenerateProductError as exc:
        c.failed.append(f"u*v: degenerate product ({', '.join(exc.vanishing)})")
        return
    if uv is None:
        return
    ui, vi = g_inverse(u), g_inverse(v)
    uvi = g_inverse(uv)
    c.same("(u*v)^-1 = v^-1*u^-1", uvi, c.compose("v^-1*u^-1", vi, ui))
    c.same("(u*v)*v^-1 = u", c.compose("(u*v)*v^-1", uv, vi), u)
    c.same("u^-1*(u*v) = v", c.compose("u^-1*(u*v)", ui, uv), v)
    c.same("v*(u*v)^-1 = u^-1", c.compose("v*(u*v)^-1", v, uvi), ui)
    c.same("(u*v)^-1*u = v^-1", c.compose("(u*v)^-1*u", uvi, u), vi)


def _check_single(c: _Checker, x: GroupoidElement) -> None:
    xi = g_inverse(x)
    c.same("(x^-1)^-1 = x", g_inverse(xi), x)
    right = c.compose("x*x^-1", x, xi)
    left = c.compose("x^-1*x", xi, x)
    if right is not None and not right.is_identity:
        c.failed.append("x*x^-1 is not an identity")
    if left is not None and not left.is_identity:
        c.failed.append("x^-1*x is not an identity")
    c.same("x*1 = x", c.compose("x*1", x, identity(x.target(), x.mode)), x)
    c.same("1*x = x", c.compose("1*x", identity(x.source(), x.mode), x), x)
    c.same("(x*x^-1)*x = x", c.compose("(x*x^-1)*x", right, x), x)
    c.same("x^-1*(x*x^-1) = x^-1", c.compose("x^-1*(x*x^-1)", xi, right), xi)


def _check_assoc(c: _Checker, u, v, w) -> None:
    uv = c.compose("u*v", u, v)
    vw = c.compose("v*w", v, w)
    if uv is None or vw is None:
        return
    c.same("(u*v)*w = u*(v*w)", c.compose("(u*v)*w", uv, w), c.compose("u*(v*w)", u, vw))


def axiom_suite(samples: Iterable[Sequence[GroupoidElement]], seed: int = 0) -> FuzzReport:
    """Check groupoid and invertible-magmoid laws on each sample.

    Every element gets the inverse and identity laws; every consecutive pair
    whose composition is defined gets the five cancellation identities; a
    triple additionally gets associativity.
    """
    report = FuzzReport()
    for i, sample in enumerate(samples):
        c = _Checker()
        for x in sample:
            _check_single(c, x)
        for u, v in zip(sample, sample[1:]):
            _check_pair(c, u, v)
        if len(sample) == 3:
            _check_assoc(c, *sample)
        report.max_residual = max(report.max_residual, c.residual)
        report.record(not c.failed, Failure(seed, i, list(sample), "; ".join(c.failed)) if c.failed else None)
    return report


# Sampling --------------------------------------------------------------------

MAX_RETRIES = 200
FAMILY_RANGE = 30


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _rational(rng: np.random.Generator, size: int = 9) -> GaussianRational:
    num = 0
    while num == 0:
        num = int(rng.integers(-size, size + 1))
    return GaussianRational(num) / int(rng.integers(1, size + 1))


def _composable(chain: Sequence[GroupoidElement]) -> bool:
    for x, y in zip(chain, chain[1:]):
        try:
            xy = g_compose(x, y)
        except DegenerateProductError:
            return False
        if xy is None:
            return False
    return True


def _family_chain(rng: np.random.Generator, length: int) -> list[GroupoidElement]:
    for _ in range(MAX_RETRIES):
        r = lambda: _rational(rng, FAMILY_RANGE)  # noqa: E731
        try:
            params = FamilyParams(r(), r(), r())
            chain = [element(r_family(params, "cf", GroupElem3(r(), r(), r()))) for _ in range(length)]
        except (ValueError, SingularMatrixError):
            continue
        if _composable(chain):
            return chain
    raise SamplingError("no nondegenerate constant-field chain found")


def _complex(rng: np.random.Generator) -> complex:
    return complex(rng.normal(), rng.normal())


def _random_nff(rng: np.random.Generator, mode: ScalarMode) -> SixVertexMatrix:
    for _ in range(MAX_RETRIES):
        u = SixVertexMatrix(*(_complex(rng) for _ in range(6)), mode=mode)
        if in_S_times(u) and classify(u).non_free_fermionic:
            return u
    raise SamplingError("no non-free-fermionic matrix found")


def _cross_step(rng: np.random.Generator, u: SixVertexMatrix) -> tuple[SixVertexMatrix, SixVertexMatrix]:
    """Draw ``v`` with ``u * v`` defined, returning ``(v, u * v)``.

    The product ``w`` has random a1, a2, c1, c2. Its b-entries are chosen so
    that ``Delta(w^-1) = Delta(u^-1)``, which is exactly the condition for
    ``v = solve_v(u, w)`` to exist: with ``k = b2/b1`` forced by the ratio
    of the two statistics, ``b1`` solves a quadratic.
    """
    mode = u.mode
    target = delta(inverse(u))
    for _ in range(MAX_RETRIES):
        a1, a2, c1, c2 = (_complex(rng) for _ in range(4))
        # Delta(w^-1) = ((a1/a2) Delta1(w), (a2/a1) Delta2(w)) for w in S^x
        e1 = a2 / a1 * target.d1
        e2 = a1 / a2 * target.d2
        k = a1 * e1 / (a2 * e2)
        # a1 a2 + k b1^2 - c1 c2 = 2 a1 e1 b1
        roots = np.roots([k, -2 * a1 * e1, a1 * a2 - c1 * c2])
        b1 = complex(roots[int(rng.integers(len(roots)))])
        w = SixVertexMatrix(a1, a2, b1, k * b1, c1, c2, mode=mode)
        if not in_S_times(w):
            continue
        try:
            v = solve_v(u, w)
        except (DegenerateProductError, NotInSError, SingularMatrixError):
            continue
        if v is None or not in_S_times(v) or not classify(v).non_free_fermionic:
            continue
        if not _composable([element(u), element(v)]):
            continue
        return v, w
    raise SamplingError("cross-vertex step kept producing degenerate matrices")


def _cross_chain(rng: np.random.Generator, length: int, mode: ScalarMode) -> list[GroupoidElement]:
    chain = [_random_nff(rng, mode)]
    while len(chain) < length:
        v, _ = _cross_step(rng, chain[-1])
        chain.append(v)
    return [element(m) for m in chain]


def _chain(strategy: str, seed: int, index: int, length: int, eps: float) -> list[GroupoidElement]:
    rng = _trial_rng(seed, index)
    if strategy == "family_exact":
        return _family_chain(rng, length)
    if strategy == "cross_float":
        return _cross_chain(rng, length, ScalarMode.float_mode(eps))
    raise ValueError(f"unknown strategy {strategy!r}")


def sample_composable(
    strategy: str, seed: int, count: int, length: int = 2, eps: float = 1e-9
) -> list[list[GroupoidElement]]:
    """``count`` chains in which every consecutive pair composes.

    ``family_exact`` stays inside one random constant-field family with
    rational parameters; ``cross_float`` moves between vertex groups. Chain
    ``i`` depends only on ``(seed, i)``.
    """
    if length not in (2, 3):
        raise ValueError("chains have length 2 or 3")
    return [_chain(strategy, seed, i, length, eps) for i in range(count)]


def associativity_fuzz(strategy: str, seed: int, trials: int, eps: float = 1e-9) -> FuzzReport:
    """Test that ``u*v`` and ``v*w`` defined imply ``(u*v)*w = u*(v*w)``, both defined."""
    report = FuzzReport()
    for i in range(trials):
        c = _Checker()
        try:
            chain = _chain(strategy, seed, i, 3, eps)
        except SamplingError as exc:
            report.record(False, Failure(seed, i, [], f"sampling: {exc}"))
            continue
        _check_assoc(c, *chain)
        report.max_residual = max(report.max_residual, c.residual)
        report.record(not c.failed, Failure(seed, i, chain, "; ".join(c.failed)) if c.failed else None)
    return report
