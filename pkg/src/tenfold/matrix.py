"""Small dense exact-matrix helpers.

Matrices are lists of row lists holding ints or Fractions.  Nothing here
mutates its arguments.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ShapeError
from .ring import as_integer

Matrix = list[list]


def shape(a: Matrix) -> tuple[int, int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for row in a:
        if len(row) != cols:
            raise ShapeError("ragged matrix: rows have different lengths")
    return rows, cols


def square_size(a: Matrix) -> int:
    m, n = shape(a)
    if m != n:
        raise ShapeError(f"expected a square matrix, got {m}x{n}")
    return n


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def copy(a: Matrix) -> Matrix:
    return [list(row) for row in a]


def diag(entries, cols: int | None = None) -> Matrix:
    entries = list(entries)
    m = len(entries)
    n = m if cols is None else cols
    out = zeros(m, n)
    for i, d in enumerate(entries):
        out[i][i] = d
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ShapeError(f"cannot multiply {m}x{k} by {k2}x{n}")
    bt = transpose(b) if k else [[] for _ in range(n)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Matrix, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(square_size(a))), Fraction(0))


def to_integer_matrix(a: Matrix) -> Matrix:
    return [[as_integer(x) for x in row] for row in a]


def to_fraction_matrix(a: Matrix) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


def _echelon(a: Matrix) -> tuple[Matrix, int, int]:
    """Fraction row echelon form; returns (matrix, rank, sign of row swaps)."""
    r = to_fraction_matrix(a)
    m, n = shape(a)
    rank, sign = 0, 1
    for col in range(n):
        pivot = next((i for i in range(rank, m) if r[i][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            r[rank], r[pivot] = r[pivot], r[rank]
            sign = -sign
        for i in range(rank + 1, m):
            if r[i][col]:
                f = r[i][col] / r[rank][col]
                r[i] = [x - f * y for x, y in zip(r[i], r[rank])]
        rank += 1
        if rank == m:
            break
    return r, rank, sign


def det(a: Matrix) -> Fraction:
    n = square_size(a)
    if n == 0:
        return Fraction(1)
    r, rank, sign = _echelon(a)
    if rank < n:
        return Fraction(0)
    out = Fraction(sign)
    for i in range(n):
        out *= r[i][i]
    return out


def rank(a: Matrix) -> int:
    """Rank over the rationals (the field-case rank)."""
    if not a or not a[0]:
        return 0
    return _echelon(a)[1]


def permute_entries_equal(a: Matrix, b: Matrix) -> bool:
    """Whether two matrices hold the same multiset of entries."""
    return sorted(Fraction(x) for row in a for x in row) == sorted(Fraction(x) for row in b for x in row)
