"""Dense exact matrices over the rationals.

Entries are Python ints or Fractions (ints are kept as ints so the common
all-integer case stays on the fast path).  Rank and determinants use
fraction-free Bareiss elimination; characteristic polynomials go through
integer evaluation at dimension+1 points followed by exact interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .polys import IntPoly, interpolate_fractions, interpolate_int_poly


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nr, nc, flat)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integer(self) -> bool:
        return all(
            isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1)
            for e in self.entries
        )

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.at(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(Fraction(e) for e in self.entries)))

    def __repr__(self):
        return f"ExactMatrix.from_rows({self.row_lists()!r})"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a = self.row_lists()
        bt = other.transpose().row_lists()
        flat = []
        for r in a:
            for c in bt:
                flat.append(sum(x * y for x, y in zip(r, c)))
        return ExactMatrix(self.rows, other.cols, flat)

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return [
            sum(self.at(i, j) * v[j] for j in range(self.cols))
            for i in range(self.rows)
        ]


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    """Scale each row to integers (rank is unaffected by row scaling)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        d = lcm(*(Fraction(e).denominator for e in row)) if row else 1
        out.append([int(Fraction(e) * d) for e in row])
    return out


def int_rank(rows: list[list[int]], ncols: int | None = None) -> int:
    """Rank of an integer matrix by fraction-free Bareiss elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    nrows = len(rows)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            rr = rows[r]
            pr = rows[rank]
            for c in range(col + 1, ncols):
                rr[c] = (rr[c] * p - f * pr[c]) // prev
            rr[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def int_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        for r in range(col + 1, n):
            f = m[r][col]
            rr = m[r]
            pr = m[col]
            for c in range(col + 1, n):
                rr[c] = (rr[c] * p - f * pr[c]) // prev
            rr[col] = 0
        prev = p
    return sign * m[n - 1][n - 1]


def mat_rank(m: ExactMatrix) -> int:
    """Exact rank over the rationals."""
    return int_rank(_integer_rows(m), m.cols)


def mat_det(m: ExactMatrix):
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    if m.is_integer():
        return int_det([[int(Fraction(e)) for e in m.row(i)] for i in range(m.rows)])
    # scale rows to integers and divide the scale factors back out
    scale = Fraction(1)
    rows = []
    for i in range(m.rows):
        row = m.row(i)
        d = lcm(*(Fraction(e).denominator for e in row))
        scale *= d
        rows.append([int(Fraction(e) * d) for e in row])
    return Fraction(int_det(rows)) / scale

def solve(m: ExactMatrix, b: Sequence) -> list[Fraction]:
    """Solve m x = b exactly; raises ValueError on a singular matrix."""
    if not m.is_square:
        raise ValueError("solve requires a square matrix")
    n = m.rows
    if len(b) != n:
        raise ValueError("shape mismatch")
    aug = [[Fraction(e) for e in m.row(i)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col] / p
                ar, ac = aug[r], aug[col]
                for c in range(col, n + 1):
                    ar[c] -= f * ac[c]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def inverse(m: ExactMatrix) -> ExactMatrix:
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [
        [Fraction(e) for e in m.row(i)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                ar, ac = aug[r], aug[col]
                for c in range(col, 2 * n):
                    ar[c] -= f * ac[c]
    flat = []
    for i in range(n):
        flat.extend(aug[i][n:])
    return ExactMatrix(n, n, flat)


def _int_rows_strict(m: ExactMatrix) -> list[list[int]]:
    if not m.is_integer():
        raise ValueError("integer matrix required")
    return [[int(Fraction(e)) for e in m.row(i)] for i in range(m.rows)]


def char_poly(m: ExactMatrix) -> IntPoly:
    """det(tI - m) for a square integer matrix, exact and monic.

    Evaluates det(cI - m) at dimension+1 integer points and interpolates;
    this keeps everything in integer arithmetic.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    rows = _int_rows_strict(m)
    n = m.rows
    points = list(range(n + 1))
    values = []
    for c in points:
        shifted = [
            [c - x if i == j else -x for j, x in enumerate(rows[i])] for i in range(n)
        ]
        values.append(int_det(shifted))
    p = interpolate_int_poly(points, values)
    assert p.degree == n and p.leading() == 1
    return p


def gershgorin_bound(rows: list[list[int]]) -> int:
    """Integer bound B with every eigenvalue in [-B, B]."""
    return max((sum(abs(x) for x in r) for r in rows), default=0)


@lru_cache(maxsize=None)
def _adjugate_points_cached(rows_key: tuple) -> tuple:
    rows = [list(r) for r in rows_key]
    n = len(rows)
    base = gershgorin_bound(rows) + 1
    points = tuple(range(base, base + n))
    adjs = []
    for c in points:
        shifted = ExactMatrix.from_rows(
            [[c - x if i == j else -x for j, x in enumerate(rows[i])] for i in range(n)]
        )
        d = int_det(shifted.row_lists())
        inv = inverse(shifted)
        adj = [[int(e * d) for e in inv.row(i)] for i in range(n)]
        adjs.append(tuple(tuple(r) for r in adj))
    return points, tuple(adjs)


def adjugate_samples(m: ExactMatrix):
    """(points, adjugates): adj(cI - m) at dim-many safe integer points c.

    The points all exceed the Gershgorin bound, so cI - m is invertible at
    each of them.  Cached: the census hits the same matrices repeatedly.
    """
    rows = _int_rows_strict(m)
    return _adjugate_points_cached(tuple(tuple(r) for r in rows))


def bilinear_numerator_fractions(m: ExactMatrix, y: Sequence, z: Sequence) -> tuple:
    """Coefficients (Fractions, low first) of y^T adj(tI - m) z.

    Degree is at most dim-1, so dim sample points determine it.
    """
    n = m.rows
    if len(y) != n or len(z) != n:
        raise ValueError("shape mismatch")
    points, adjs = adjugate_samples(m)
    values = []
    for adj in adjs:
        values.append(
            sum(y[i] * adj[i][j] * z[j] for i in range(n) for j in range(n))
        )
    return interpolate_fractions(points, values)


def bilinear_numerator_poly(m: ExactMatrix, y: Sequence, z: Sequence) -> IntPoly:
    coeffs = bilinear_numerator_fractions(m, y, z)
    if any(Fraction(c).denominator != 1 for c in coeffs):
        raise ValueError("numerator polynomial is not integral")
    return IntPoly(int(c) for c in coeffs)
