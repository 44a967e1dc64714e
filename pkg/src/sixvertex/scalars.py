"""Scalars in two interchangeable modes.

Exact mode uses Gaussian rationals (elements of Q(i)), so equality is
decidable and every algebraic identity can be checked without rounding.
Float mode uses Python ``complex`` together with a relative tolerance, for
values that need roots of unity outside Q(i).

The two modes never mix: combining a :class:`GaussianRational` with a float
or complex raises :class:`ModeError`.
"""

from __future__ import annotations

import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

from .exceptions import ModeError, ParseError

__all__ = [
    "GaussianRational",
    "Scalar",
    "ScalarMode",
    "EXACT",
    "FLOAT",
    "mode_of",
    "parse_scalar",
    "render_scalar",
    "scalar_arith",
    "scalar_eq",
    "scalar_to_json",
    "scalar_from_json",
]

DEFAULT_EPS = 1e-9


_MPQ = type(mpq(0))


def _fraction(value):
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, (int, numbers.Rational)):
        return mpq(int(value)) if isinstance(value, bool) else mpq(value)
    raise ModeError(f"exact scalars need rational parts, got {type(value).__name__}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts.

    Both parts are ``gmpy2.mpq`` values, always in lowest terms with a
    positive denominator.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise ModeError("cannot combine a GaussianRational real part with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        self.re = _fraction(re)
        self.im = _fraction(im)

    @classmethod
    def _make(cls, re, im) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction, _MPQ)):
            return GaussianRational._make(mpq(other), _ZERO_F)
        if isinstance(other, (float, complex)):
            raise ModeError("cannot mix exact and floating-point scalars")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return GaussianRational._make(self.re * o.re, _ZERO_F)
        return GaussianRational._make(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.reciprocal()

    def reciprocal(self) -> "GaussianRational":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("division by exact zero")
            return GaussianRational._make(1 / self.re, _ZERO_F)
        norm = self.re * self.re + self.im * self.im
        return GaussianRational._make(self.re / norm, -self.im / norm)

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, _MPQ)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({render_scalar(self)!r})"

    def __str__(self):
        return render_scalar(self)


_ZERO_F = mpq(0)

Scalar = Union[GaussianRational, complex]


@dataclass(frozen=True)
class ScalarMode:
    """Either exact Gaussian-rational arithmetic or complex floats with tolerance ``eps``."""

    kind: str = "exact"
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown scalar mode {self.kind!r}")
        if self.kind == "float" and not self.eps > 0:
            raise ValueError("float mode needs a positive tolerance")

    @property
    def exact(self) -> bool:
        return self.kind == "exact"

    @classmethod
    def float_mode(cls, eps: float = DEFAULT_EPS) -> "ScalarMode":
        return cls("float", eps)

    def coerce(self, value) -> Scalar:
        """Convert ``value`` into a scalar of this mode."""
        if self.exact:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, str):
                return parse_scalar(value, self)
            return GaussianRational(value)
        if isinstance(value, GaussianRational):
            raise ModeError("exact scalar passed where a float scalar was expected")
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, numbers.Complex):
            return complex(value)
        raise ModeError(f"cannot convert {type(value).__name__} to a float scalar")

    def check(self, x) -> None:
        if self.exact != isinstance(x, GaussianRational):
            raise ModeError(f"scalar {x!r} does not belong to {self.kind} mode")

    def one(self) -> Scalar:
        return GaussianRational._make(mpq(1), _ZERO_F) if self.exact else 1 + 0j

    def zero(self) -> Scalar:
        return GaussianRational._make(_ZERO_F, _ZERO_F) if self.exact else 0j

    def eq(self, x, y) -> bool:
        self.check(x)
        self.check(y)
        if self.exact:
            return x == y
        return abs(x - y) <= self.eps * max(1.0, abs(x), abs(y))

    def is_zero(self, x) -> bool:
        self.check(x)
        if self.exact:
            return not x
        return abs(x) <= self.eps


EXACT = ScalarMode("exact")
FLOAT = ScalarMode("float", DEFAULT_EPS)


def mode_of(x) -> ScalarMode:
    """The mode a single scalar belongs to (float mode gets the default tolerance)."""
    if isinstance(x, GaussianRational):
        return EXACT
    if isinstance(x, (float, complex)):
        return FLOAT
    if isinstance(x, (int, Fraction, _MPQ)):
        return EXACT
    raise ModeError(f"not a scalar: {x!r}")


# Text grammar ----------------------------------------------------------------

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_EXACT_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RATIONAL})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)?i)?"
    rf"|(?P<imonly>[+-]?(?:\d+(?:/\d+)?)?)i)\s*$"
)


def _parse_rational(token: str):
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return mpq(int(num), int(den) if den else 1)


def parse_scalar(text: str, mode: ScalarMode = EXACT) -> Scalar:
    """Parse ``text`` into a scalar.

    Exact mode accepts ``p/q``, ``p/q+r/si``, ``p/q-r/si`` and pure
    imaginaries such as ``3i``. Float mode accepts anything ``complex()``
    understands, with ``i`` allowed in place of ``j``.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    if mode.exact:
        m = _EXACT_RE.match(text)
        if m is None:
            bad = _first_bad_token(text)
            raise ParseError(f"malformed exact scalar {text!r} (offending token {bad!r})")
        if m.group("imonly") is not None:
            tok = m.group("imonly")
            if tok in ("", "+"):
                tok = "1"
            elif tok == "-":
                tok = "-1"
            return GaussianRational._make(_ZERO_F, _parse_rational(tok))
        re_part = _parse_rational(m.group("re"))
        im_part = _ZERO_F
        if m.group("sign"):
            im_tok = m.group("im") or "1"
            im_part = _parse_rational(im_tok)
            if m.group("sign") == "-":
                im_part = -im_part
        return GaussianRational._make(re_part, im_part)
    cleaned = text.strip().replace(" ", "")
    if cleaned.endswith("i"):
        cleaned = cleaned[:-1] + "j"
    try:
        return complex(cleaned)
    except ValueError:
        raise ParseError(f"malformed float scalar {text!r}") from None


def _first_bad_token(text: str) -> str:
    allowed = set("0123456789/+-i ")
    for ch in text:
        if ch not in allowed:
            return ch
    return text.strip()


def _render_rational(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_scalar(x: Scalar) -> str:
    """Inverse of :func:`parse_scalar` on canonical forms."""
    if isinstance(x, GaussianRational):
        if not x.im:
            return _render_rational(x.re)
        sign = "-" if x.im < 0 else "+"
        return f"{_render_rational(x.re)}{sign}{_render_rational(abs(x.im))}i"
    x = complex(x)
    if x.imag == 0:
        return repr(x.real)
    sign = "-" if x.imag < 0 or (x.imag == 0 and math.copysign(1, x.imag) < 0) else "+"
    return f"{x.real!r}{sign}{abs(x.imag)!r}i"


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Apply ``op`` (one of add, sub, mul, div) after checking both operands share a mode."""
    if isinstance(x, GaussianRational) != isinstance(y, GaussianRational):
        raise ModeError("operands belong to different scalar modes")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("division by zero scalar")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def scalar_eq(x: Scalar, y: Scalar, mode: ScalarMode | None = None) -> bool:
    if mode is None:
        mode = mode_of(x)
    return mode.eq(x, y)


def scalar_to_json(x: Scalar):
    if isinstance(x, GaussianRational):
        return {"re": _render_rational(x.re), "im": _render_rational(x.im)}
    x = complex(x)
    return {"re": x.real, "im": x.imag}


def scalar_from_json(obj, mode: ScalarMode | None = None) -> Scalar:
    """Decode a scalar; bare strings and numbers are accepted as shorthand."""
    if isinstance(obj, dict):
        if set(obj) - {"re", "im"}:
            raise ParseError(f"unexpected scalar keys {sorted(set(obj) - {'re', 'im'})}")
        re_v, im_v = obj.get("re", 0), obj.get("im", 0)
        if mode is None:
            mode = FLOAT if isinstance(re_v, float) or isinstance(im_v, float) else EXACT
        if mode.exact:
            parts = []
            for part in (re_v, im_v):
                if isinstance(part, str):
                    parts.append(_parse_part(part))
                elif isinstance(part, int) and not isinstance(part, bool):
                    parts.append(mpq(part))
                else:
                    raise ParseError(f"exact scalar part must be a rational string, got {part!r}")
            return GaussianRational._make(parts[0], parts[1])
        try:
            return complex(float(re_v), float(im_v))
        except (TypeError, ValueError):
            raise ParseError(f"bad float scalar {obj!r}") from None
    if isinstance(obj, str):
        return parse_scalar(obj, mode or EXACT)
    if isinstance(obj, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(obj, int):
        return (mode or EXACT).coerce(obj)
    if isinstance(obj, float):
        return (mode or FLOAT).coerce(obj)
    raise ParseError(f"cannot decode scalar from {obj!r}")


def _parse_part(token: str):
    if not re.fullmatch(_RATIONAL, token.strip()):
        raise ParseError(f"malformed rational {token!r}")
    return _parse_rational(token.strip())
