"""Dense exact matrices over Q(z), the degree-8 cyclotomic field.

Storage is a flat tuple of integer numerators (four components per entry,
row-major) over a single positive denominator shared by the whole matrix,
with the joint content reduced to 1.  That form is canonical, so equality
is structural, and it feeds the multiplication kernel integer-only work.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from sympdec import kernels
from sympdec.cyclotomic import CycScalar, as_cyc, _mul4
from sympdec.errors import ShapeMismatchError, SingularMatrixError


class ExactMatrix:
    __slots__ = ("rows", "cols", "num", "den")

    def __init__(self, rows: int, cols: int, num, den: int = 1):
        if rows < 0 or cols < 0:
            raise ShapeMismatchError("negative dimensions")
        num = list(num)
        if len(num) != rows * cols * 4:
            raise ShapeMismatchError(
                f"expected {rows * cols * 4} numerator components, got {len(num)}"
            )
        self.rows = rows
        self.cols = cols
        self.num, self.den = _reduce_content(num, den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, entries) -> "ExactMatrix":
        """Build from a list of rows whose entries are CycScalar, int or Fraction."""
        grid = [[as_scalar(x) for x in row] for row in entries]
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(row) != cols for row in grid):
            raise ShapeMismatchError("ragged rows")
        den = 1
        for row in grid:
            for x in row:
                den = den * x.den // gcd(den, x.den)
        num = []
        for row in grid:
            for x in row:
                f = den // x.den
                num.extend(c * f for c in x.num)
        return cls(rows, cols, num, den)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        num = [0] * (n * n * 4)
        for i in range(n):
            num[(i * n + i) * 4] = 1
        return cls(n, n, num, 1)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols * 4), 1)

    # -- element access ----------------------------------------------------

    def entry(self, i: int, j: int) -> CycScalar:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        p = (i * self.cols + j) * 4
        return CycScalar._raw(tuple(self.num[p:p + 4]), self.den)

    def __getitem__(self, ij):
        return self.entry(*ij)

    def row(self, i: int) -> list[CycScalar]:
        return [self.entry(i, j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.num)

    def is_identity(self) -> bool:
        return self.is_square() and self == ExactMatrix.identity(self.rows)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError("addition shape mismatch")
        da, db = self.den, other.den
        g = gcd(da, db)
        fa, fb = db // g, da // g
        num = [x * fa + y * fb for x, y in zip(self.num, other.num)]
        return ExactMatrix(self.rows, self.cols, num, da * fa)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, [-x for x in self.num], self.den)

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        num = kernels.matmul_num(self.num, other.num, self.rows, self.cols, other.cols)
        return ExactMatrix(self.rows, other.cols, num, self.den * other.den)

    def scale(self, a) -> "ExactMatrix":
        a = as_scalar(a)
        num = []
        for p in range(0, len(self.num), 4):
            num.extend(_mul4(tuple(self.num[p:p + 4]), a.num))
        return ExactMatrix(self.rows, self.cols, num, self.den * a.den)

    def transpose(self) -> "ExactMatrix":
        r, c = self.rows, self.cols
        num = [0] * (len(self.num))
        for i in range(r):
            for j in range(c):
                p = (i * c + j) * 4
                q = (j * r + i) * 4
                num[q:q + 4] = self.num[p:p + 4]
        return ExactMatrix(c, r, num, self.den)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, left factor major: (A kron B)[ip+k, jq+l] = A[i,j]*B[k,l]."""
        r, c, p, q = self.rows, self.cols, other.rows, other.cols
        num = [0] * (r * p * c * q * 4)
        outc = c * q
        for i in range(r):
            for j in range(c):
                s = (i * c + j) * 4
                a = tuple(self.num[s:s + 4])
                if a == (0, 0, 0, 0):
                    continue
                for k in range(p):
                    for l in range(q):
                        t = (k * q + l) * 4
                        b = tuple(other.num[t:t + 4])
                        if b == (0, 0, 0, 0):
                            continue
                        o = ((i * p + k) * outc + (j * q + l)) * 4
                        num[o:o + 4] = _mul4(a, b)
        return ExactMatrix(r * p, outc, num, self.den * other.den)

    # -- elimination-based operations --------------------------------------

    def _working_rows(self) -> list[list[CycScalar]]:
        return [self.row(i) for i in range(self.rows)]

    def det(self) -> CycScalar:
        if not self.is_square():
            raise ShapeMismatchError("determinant of non-square matrix")
        n = self.rows
        a = self._working_rows()
        det = CycScalar.one()
        for col in range(n):
            pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if pivot is None:
                return CycScalar.zero()
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det = det * a[col][col]
            inv = a[col][col].inv()
            for r in range(col + 1, n):
                if a[r][col].is_zero():
                    continue
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise ShapeMismatchError("inverse of non-square matrix")
        n = self.rows
        a = self._working_rows()
        b = ExactMatrix.identity(n)._working_rows()
        for col in range(n):
            pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                b[col], b[pivot] = b[pivot], b[col]
            inv = a[col][col].inv()
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r == col or a[r][col].is_zero():
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return ExactMatrix.from_rows(b)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.den, tuple(self.num)))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, den={self.den})"

    def __str__(self):
        cells = [[str(self.entry(i, j)) for j in range(self.cols)] for i in range(self.rows)]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _reduce_content(num: list[int], den: int) -> tuple[list[int], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        num = [-x for x in num]
    g = 0
    for x in num:
        g = gcd(g, x)
        if g == 1:
            break
    g = gcd(g, den)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    if g == 0:
        den = 1
    return num, den


def as_scalar(x) -> CycScalar:
    s = as_cyc(x)
    if s is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")
    return s


def perm_matrix(cols: list[int]) -> ExactMatrix:
    """Permutation matrix whose k-th column is the standard basis vector e[cols[k]]."""
    n = len(cols)
    if sorted(cols) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    num = [0] * (n * n * 4)
    for k, r in enumerate(cols):
        num[(r * n + k) * 4] = 1
    return ExactMatrix(n, n, num, 1)


def block_matrix(grid) -> ExactMatrix:
    """Assemble a matrix from a 2-D grid of conforming blocks."""
    if not grid or not grid[0]:
        return ExactMatrix.zeros(0, 0)
    row_heights = [row[0].rows for row in grid]
    col_widths = [b.cols for b in grid[0]]
    for row in grid:
        if len(row) != len(col_widths):
            raise ShapeMismatchError("ragged block grid")
        for b, w in zip(row, col_widths):
            if b.cols != w or b.rows != row[0].rows:
                raise ShapeMismatchError("inconsistent block sizes")
    rows = sum(row_heights)
    cols = sum(col_widths)
    den = 1
    for row in grid:
        for b in row:
            den = den * b.den // gcd(den, b.den)
    num = [0] * (rows * cols * 4)
    r0 = 0
    for row, h in zip(grid, row_heights):
        c0 = 0
        for b, w in zip(row, col_widths):
            f = den // b.den
            for i in range(h):
                for j in range(w):
                    s = (i * w + j) * 4
                    o = ((r0 + i) * cols + (c0 + j)) * 4
                    num[o] = b.num[s] * f
                    num[o + 1] = b.num[s + 1] * f
                    num[o + 2] = b.num[s + 2] * f
                    num[o + 3] = b.num[s + 3] * f
            c0 += w
        r0 += h
    return ExactMatrix(rows, cols, num, den)


def block_diag(*blocks: ExactMatrix) -> ExactMatrix:
    """Plain block-diagonal assembly diag(B1, ..., Bk)."""
    grid = []
    for i, b in enumerate(blocks):
        row = []
        for j, c in enumerate(blocks):
            row.append(b if i == j else ExactMatrix.zeros(b.rows, c.cols))
        grid.append(row)
    return block_matrix(grid)
