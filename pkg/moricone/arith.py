"""Exact rational linear algebra.

Every scalar in moricone is a `fractions.Fraction`. Vectors are plain tuples
and matrices are `RatMatrix` instances. Nothing in here ever touches a float.

Rank, solving and determinants go through fraction-free (Bareiss) elimination
on integer rows: each rational row is first scaled by the lcm of its
denominators, which changes neither the rank nor the solution set.

Attributes:
    Rational (Type[Fraction]): (Type alias) The scalar type.
    RationalVector (Tuple[Fraction, ...]): (Type alias) Dense rational vector.
    IntVector (Tuple[int, ...]): (Type alias) Dense integer vector.
    RationalLike (Union[Fraction, int, str]): (Type alias) Anything `to_rational` accepts.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, SingularMatrix

__all__ = ["Rational", "RationalVector", "IntVector", "RationalLike",
           "parse_rational", "format_rational", "to_rational", "vector",
           "RatMatrix",
           "dot", "mat_vec", "add", "scale", "is_zero",
           "rank", "solve", "primitive", "determinant", "inverse", "rref", "nullspace"]

Rational = Fraction
RationalVector = Tuple[Fraction, ...]
IntVector = Tuple[int, ...]
RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"\s*[+-]?\d+(?:/\d+)?\s*")


def parse_rational(value: str) -> Fraction:
    """Parse a rational from its "p/q" string form.

    Non-normalised input such as "2/4" or "+3" is accepted, decimal
    notation isn't.

    Raises:
        ValueError: If the string isn't of the form "p" or "p/q", or if q is zero.
    """
    if not _RATIONAL_PATTERN.fullmatch(value):
        raise ValueError(f"not a rational: {value!r}")

    try:
        return Fraction(value.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {value!r}") from None


def format_rational(value: Fraction) -> str:
    """Format a rational as "p/q", or "p" if it's an integer.

    This is the serialised form used by every file format.
    """
    return str(Fraction(value))


def to_rational(value: RationalLike) -> Fraction:
    """Convert a `RationalLike` to a `Fraction`.

    Raises:
        TypeError: For floats and other types without an exact meaning.
    """
    if isinstance(value, Fraction):
        return value
    elif isinstance(value, bool):
        raise TypeError(f"refusing to treat {value!r} as a rational")
    elif isinstance(value, int):
        return Fraction(value)
    elif isinstance(value, str):
        return parse_rational(value)
    else:
        raise TypeError(f"can't convert {type(value).__name__} to an exact rational: {value!r}")


def vector(values: Iterable[RationalLike]) -> RationalVector:
    """Create a rational vector."""
    return tuple(to_rational(value) for value in values)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class RatMatrix:
    """Dense rational matrix.

    Attributes:
        rows (int): Number of rows
        cols (int): Number of columns
        entries (Tuple[Fraction, ...]): Row-major entries
    """
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                             f"got {len(self.entries)}")

        object.__setattr__(self, "entries", vector(self.entries))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(format_rational, row)) + "]" for row in self.to_rows()) + "]"

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented

        if self.cols != other.rows:
            raise DimensionMismatch(self.cols, other.rows)

        columns = other.to_columns()
        return RatMatrix.from_rows(([dot(row, column) for column in columns] for row in self.to_rows()),
                                   cols=other.cols)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]], cols: int = None) -> "RatMatrix":
        """Build a matrix from its rows.

        Args:
            rows: Rows of the matrix.
            cols: Number of columns. Only required when there are no rows.
        """
        row_list = [vector(row) for row in rows]

        if cols is None:
            if not row_list:
                raise ValueError("can't infer the column count of a matrix without rows")
            cols = len(row_list[0])

        for row in row_list:
            if len(row) != cols:
                raise DimensionMismatch(cols, len(row))

        return cls(len(row_list), cols, tuple(entry for row in row_list for entry in row))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        """Create the n×n identity matrix."""
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RatMatrix":
        """Create a square diagonal matrix."""
        n = len(values)
        return cls.from_rows(([values[i] if i == j else 0 for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        """Create a zero matrix."""
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> RationalVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> RationalVector:
        return self.entries[j::self.cols]

    def to_rows(self) -> List[RationalVector]:
        return [self.row(i) for i in range(self.rows)]

    def to_columns(self) -> List[RationalVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(self.to_columns(), cols=self.rows)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Standard inner product of two equally long vectors.

    Raises:
        DimensionMismatch: If the lengths differ.
    """
    if len(a) != len(b):
        raise DimensionMismatch(len(a), len(b))

    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def mat_vec(m: RatMatrix, v: Sequence[Fraction]) -> RationalVector:
    """Compute the product m·v."""
    if len(v) != m.cols:
        raise DimensionMismatch(m.cols, len(v))

    return tuple(dot(row, v) for row in m.to_rows())


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> RationalVector:
    if len(a) != len(b):
        raise DimensionMismatch(len(a), len(b))

    return tuple(Fraction(x) + y for x, y in zip(a, b))


def scale(t: RationalLike, v: Sequence[Fraction]) -> RationalVector:
    t = to_rational(t)
    return tuple(t * x for x in v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def _integer_row(row: Sequence[Fraction]) -> Tuple[List[int], int]:
    """Scale a rational row to integers.

    Returns:
        The integer row and the (positive) factor it was scaled by.
    """
    row = [Fraction(x) for x in row]
    denominator = reduce(_lcm, (x.denominator for x in row), 1)
    return [x.numerator * (denominator // x.denominator) for x in row], denominator


def _bareiss(rows: List[List[int]], pivot_cols: int) -> Tuple[List[List[int]], List[int], int]:
    """Fraction-free elimination to row echelon form.

    Only the first `pivot_cols` columns are used as pivot columns, the
    remaining ones (e.g. the right-hand side of a system) are carried along.
    Every division is exact: after each step the entries below the pivot rows
    are minors of the input matrix.

    Returns:
        Echelon rows, pivot column indices and the number of row swaps.
    """
    rows = [list(row) for row in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0

    previous = 1
    r = 0
    swaps = 0
    pivots: List[int] = []

    for c in range(pivot_cols):
        if r == m:
            break

        pivot_row = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue

        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            swaps += 1

        pivot = rows[r][c]
        top = rows[r]
        for i in range(r + 1, m):
            current = rows[i]
            factor = current[c]
            for j in range(c + 1, n):
                current[j] = (pivot * current[j] - factor * top[j]) // previous
            current[c] = 0

        previous = pivot
        pivots.append(c)
        r += 1

    return rows, pivots, swaps


def rank(m: RatMatrix) -> int:
    """Rank of a matrix over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0

    rows = [_integer_row(row)[0] for row in m.to_rows()]
    _, pivots, _ = _bareiss(rows, m.cols)
    return len(pivots)


def solve(m: RatMatrix, b: Sequence[RationalLike]) -> Optional[RationalVector]:
    """Find some x with m·x = b.

    Free variables are set to zero.

    Returns:
        A solution, or `None` if the system is inconsistent.

    Raises:
        DimensionMismatch: If b doesn't have m.rows entries.
    """
    b = vector(b)
    if len(b) != m.rows:
        raise DimensionMismatch(m.rows, len(b))

    n = m.cols
    if m.rows == 0:
        return (Fraction(0),) * n

    augmented = [_integer_row(row + (rhs,))[0] for row, rhs in zip(m.to_rows(), b)]
    rows, pivots, _ = _bareiss(augmented, n)

    for row in rows[len(pivots):]:
        if row[n] != 0:
            return None

    x = [Fraction(0)] * n
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        row = rows[k]
        remainder = Fraction(row[n]) - sum((row[j] * x[j] for j in range(c + 1, n)), Fraction(0))
        x[c] = remainder / row[c]

    return tuple(x)


def primitive(v: Sequence[RationalLike]) -> IntVector:
    """Canonical ray representative of a nonzero vector.

    Returns:
        The unique positive multiple of v with coprime integer entries.

    Raises:
        ValueError: If v is the zero vector.
    """
    ints, _ = _integer_row(vector(v))
    divisor = reduce(gcd, (abs(x) for x in ints), 0)
    if divisor == 0:
        raise ValueError("the zero vector has no primitive representative")

    return tuple(x // divisor for x in ints)


def determinant(m: RatMatrix) -> Fraction:
    """Determinant of a square matrix.

    Raises:
        DimensionMismatch: If the matrix isn't square.
    """
    if not m.is_square:
        raise DimensionMismatch(m.rows, m.cols)

    n = m.rows
    if n == 0:
        return Fraction(1)

    scaled = [_integer_row(row) for row in m.to_rows()]
    rows, pivots, swaps = _bareiss([row for row, _ in scaled], n)
    if len(pivots) < n:
        return Fraction(0)

    denominator = reduce(lambda a, b: a * b, (factor for _, factor in scaled), 1)
    sign = -1 if swaps % 2 else 1
    return Fraction(sign * rows[n - 1][n - 1], denominator)


def inverse(m: RatMatrix) -> RatMatrix:
    """Inverse of a square matrix.

    Raises:
        DimensionMismatch: If the matrix isn't square.
        SingularMatrix: If the matrix isn't invertible.
    """
    if not m.is_square:
        raise DimensionMismatch(m.rows, m.cols)

    n = m.rows
    columns = []
    for j in range(n):
        unit = [1 if i == j else 0 for i in range(n)]
        column = solve(m, unit)
        if column is None:
            raise SingularMatrix(f"matrix {m} is not invertible")
        columns.append(column)

    return RatMatrix.from_rows(columns, cols=n).transpose()


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int]]:
    """Reduced row echelon form.

    Zero rows are dropped, so the result has exactly rank(m) rows.

    Returns:
        The reduced matrix and its pivot columns.
    """
    rows = [list(row) for row in m.to_rows()]
    pivots: List[int] = []
    r = 0

    for c in range(m.cols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue

        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        rows[r] = [x / pivot for x in rows[r]]

        for i, row in enumerate(rows):
            if i != r and row[c] != 0:
                factor = row[c]
                rows[i] = [x - factor * y for x, y in zip(row, rows[r])]

        pivots.append(c)
        r += 1
        if r == len(rows):
            break

    return RatMatrix.from_rows(rows[:r], cols=m.cols), pivots


def nullspace(m: RatMatrix) -> List[RationalVector]:
    """Basis of the right kernel {x : m·x = 0}."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]

    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for k, c in enumerate(pivots):
            x[c] = -reduced[k, f]
        basis.append(tuple(x))

    return basis
