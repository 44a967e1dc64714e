"""Small dense square matrices over either scalar mode.

Only what the Yang-Baxter checks need: products, differences, Kronecker
products and entrywise comparison. Multiplication skips exact zeros, which
keeps the 8x8 and 2^n x 2^n products of sparse six-vertex operators cheap.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import Scalar, ScalarMode

__all__ = ["SquareMatrix"]


class SquareMatrix:
    __slots__ = ("n", "rows", "mode")

    def __init__(self, rows: Sequence[Sequence[Scalar]], mode: ScalarMode):
        rows = tuple(tuple(mode.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows
        self.mode = mode

    @classmethod
    def _raw(cls, rows, mode):
        obj = object.__new__(cls)
        obj.n = len(rows)
        obj.rows = rows
        obj.mode = mode
        return obj

    @classmethod
    def identity(cls, n: int, mode: ScalarMode) -> "SquareMatrix":
        one, zero = mode.one(), mode.zero()
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), mode)

    @classmethod
    def zeros(cls, n: int, mode: ScalarMode) -> "SquareMatrix":
        zero = mode.zero()
        return cls._raw(tuple((zero,) * n for _ in range(n)), mode)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(row) for row in self.rows]

    def _check(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        if other.mode.exact != self.mode.exact:
            raise TypeError("matrices belong to different scalar modes")
        return other

    def nonzeros(self):
        """Row-wise lists of ``(column, value)`` for the entries that are not exact zeros."""
        return [[(j, x) for j, x in enumerate(row) if x] for row in self.rows]

    def __matmul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        n = self.n
        zero = self.mode.zero()
        right = other.nonzeros()
        out = []
        for row in self.nonzeros():
            acc = {}
            for k, x in row:
                for j, y in right[k]:
                    p = x * y
                    acc[j] = acc[j] + p if j in acc else p
            out.append(tuple(acc.get(j, zero) for j in range(n)))
        return SquareMatrix._raw(tuple(out), self.mode)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return SquareMatrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.mode,
        )

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return SquareMatrix._raw(
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.mode,
        )

    def scale(self, k: Scalar) -> "SquareMatrix":
        return SquareMatrix._raw(tuple(tuple(k * x for x in row) for row in self.rows), self.mode)

    def kron(self, other: "SquareMatrix") -> "SquareMatrix":
        """Kronecker product ``self (x) other``; ``self`` acts on the leading tensor slots."""
        m = other.n
        size = self.n * m
        zero = self.mode.zero()
        rows = [[zero] * size for _ in range(size)]
        right = other.nonzeros()
        for i, row in enumerate(self.nonzeros()):
            for j, x in row:
                for k, other_row in enumerate(right):
                    for l, y in other_row:
                        rows[i * m + k][j * m + l] = x * y
        return SquareMatrix._raw(tuple(map(tuple, rows)), self.mode)

    def equals(self, other: "SquareMatrix", mode: ScalarMode | None = None) -> bool:
        mode = mode or self.mode
        if other.n != self.n:
            return False
        if mode.exact:
            return self.rows == other.rows
        return all(mode.eq(x, y) for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def is_zero(self, mode: ScalarMode | None = None) -> bool:
        mode = mode or self.mode
        if mode.exact:
            return not any(x for row in self.rows for x in row)
        return all(mode.is_zero(x) for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"SquareMatrix(n={self.n}, mode={self.mode.kind})"
