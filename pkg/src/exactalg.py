"""Exact rational scalars, projective points and dense linear algebra.

All arithmetic is over :class:`fractions.Fraction`. Matrices wrap read-only
numpy object arrays so that ``@``, outer products and fancy indexing stay
exact. Tensor products use one index convention everywhere: big-endian over
factors, i.e. the first factor is the most significant bit of the row index.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any, ClassVar, Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from vertex_errors import (
    DimensionMismatchError,
    InvalidSlotError,
    RationalParseError,
    ZeroVectorError,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]int[/int]`` into a Fraction."""
    match = _RATIONAL_LITERAL.match(text)
    if match is None:
        raise RationalParseError(text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalParseError(text, "zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """Canonical ``p/q`` string; ``q`` is omitted when it is 1."""
    return str(to_rational(value))


def to_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    # bool is an int subclass and float is inexact; neither belongs here
    if isinstance(value, (bool, float, np.floating)):
        raise TypeError(f"Refusing inexact or boolean scalar {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot convert {type(value).__name__} to a rational")


_as_fractions = np.frompyfunc(to_rational, 1, 1)


class Matrix:
    """Immutable dense matrix over the rationals.

    >>> Matrix([[1, 2], [3, 4]]) @ Matrix([[0, 1], [1, 0]])
    Matrix([[2, 1], [4, 3]])
    """

    __slots__ = ("_data",)

    def __init__(self, rows: Union[Iterable[Iterable[RationalLike]], np.ndarray]):
        data = np.array(rows, dtype=object)
        if data.ndim != 2:
            raise DimensionMismatchError("Matrix", f"ndim={data.ndim}", "ndim=2")
        data = np.asarray(_as_fractions(data), dtype=object).reshape(data.shape)
        data.flags.writeable = False
        self._data = data

    @classmethod
    def _wrap(cls, data: np.ndarray) -> "Matrix":
        # entries are already Fractions
        matrix = object.__new__(cls)
        data = np.array(data, dtype=object)
        data.flags.writeable = False
        matrix._data = data
        return matrix

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major entries."""
        return tuple(self._data.flat)

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying object array."""
        return self._data

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        return self._data[index]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._data.flat)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError("add", self.shape, other.shape)
        return Matrix._wrap(self._data + other._data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError("subtract", self.shape, other.shape)
        return Matrix._wrap(self._data - other._data)

    def __mul__(self, scalar: RationalLike) -> "Matrix":
        return Matrix._wrap(self._data * to_rational(scalar))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for x, y in zip(self._data.flat, other._data.flat)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(format_rational(x) for x in row) + "]" for row in self._data
        )
        return f"Matrix([{rows}])"


def identity(n: int) -> Matrix:
    return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def diag(*values: RationalLike) -> Matrix:
    n = len(values)
    return Matrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def swap_matrix() -> Matrix:
    """The transposition P on C^2 ⊗ C^2."""
    return Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionMismatchError("mat_mul", a.shape, b.shape)
    return Matrix._wrap(a.array @ b.array)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    outer = np.multiply.outer(a.array, b.array)
    return Matrix._wrap(
        outer.transpose(0, 2, 1, 3).reshape(a.rows * b.rows, a.cols * b.cols)
    )


def commutator(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != a.cols or a.shape != b.shape:
        raise DimensionMismatchError("commutator", a.shape, b.shape)
    return a @ b - b @ a


def det(a: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise DimensionMismatchError("det", a.shape)
    n = a.rows
    if n == 0:
        return Fraction(1)
    m = a.to_rows()
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the reduced rows and pivot columns."""
    m = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    _, pivots = _row_reduce(a.to_rows())
    return len(pivots)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination on [A | I]."""
    if a.rows != a.cols:
        raise DimensionMismatchError("inverse", a.shape)
    n = a.rows
    augmented = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.to_rows())]
    reduced, pivots = _row_reduce(augmented)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is not invertible")
    return Matrix([row[n:] for row in reduced])


_SLOTS = {12: (0, 1), 13: (0, 2), 23: (1, 2)}


def _bits3(index: int) -> tuple[int, int, int]:
    return ((index >> 2) & 1, (index >> 1) & 1, index & 1)


def embed_three(op: Matrix, slot: Union[int, str]) -> Matrix:
    """Lift a 4×4 operator to C^2 ⊗ C^2 ⊗ C^2, acting on the factor pair ``slot``.

    Row index of the result is 4*s1 + 2*s2 + s3.
    """
    if op.shape != (4, 4):
        raise DimensionMismatchError("embed_three", op.shape, (4, 4))
    try:
        first, second = _SLOTS[int(slot)]
    except (KeyError, ValueError):
        raise InvalidSlotError(slot)
    spectator = 3 - first - second
    out = np.full((8, 8), Fraction(0), dtype=object)
    for row in range(8):
        s = _bits3(row)
        for col in range(8):
            t = _bits3(col)
            if s[spectator] != t[spectator]:
                continue
            out[row, col] = op[2 * s[first] + s[second], 2 * t[first] + t[second]]
    return Matrix._wrap(out)


@dataclass(frozen=True)
class ProjPoint:
    """Point of CP^n in canonical form.

    Coordinates are cleared to a primitive integer vector (content 1) whose
    first nonzero entry is positive, so equality and printing are
    deterministic.
    """
    coords: tuple[int, ...]

    LENGTH: ClassVar[Optional[int]] = None

    def __post_init__(self):
        values = tuple(to_rational(c) for c in self.coords)
        if self.LENGTH is not None and len(values) != self.LENGTH:
            raise DimensionMismatchError(type(self).__name__, len(values), self.LENGTH)
        if not values or all(v == 0 for v in values):
            raise ZeroVectorError(values)
        scale = lcm(*(v.denominator for v in values))
        ints = [int(v * scale) for v in values]
        content = gcd(*ints)
        if next(v for v in ints if v != 0) < 0:
            content = -content
        object.__setattr__(self, "coords", tuple(v // content for v in ints))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coords)


def _coordinates(p: Union[ProjPoint, Sequence[RationalLike]]) -> tuple[Fraction, ...]:
    values = tuple(to_rational(c) for c in p)
    if all(v == 0 for v in values):
        raise ZeroVectorError(values)
    return values


def proj_equal(p: Union[ProjPoint, Sequence[RationalLike]], q: Union[ProjPoint, Sequence[RationalLike]]) -> bool:
    """True iff p and q are proportional: p_i q_j = p_j q_i for all i, j."""
    left = _coordinates(p)
    right = _coordinates(q)
    if len(left) != len(right):
        raise DimensionMismatchError("proj_equal", len(left), len(right))
    n = len(left)
    return all(
        left[i] * right[j] == left[j] * right[i]
        for i in range(n)
        for j in range(i + 1, n)
    )
