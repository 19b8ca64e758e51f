"""Dense exact linear algebra over Q.

Matrices are small (at most 16x16 in the worked examples), so everything is a
plain tuple-of-tuples of Fractions.  Kernel bases and right inverses are
pinned to the pivots of the reduced row echelon form, which makes their
output deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import format_rational, parse_rational

__all__ = [
    "RationalMatrix",
    "SingularMatrixError",
    "hconcat",
    "kernel_basis",
    "rank",
    "right_inverse",
    "rref",
    "solve_inverse",
    "vconcat",
]


class SingularMatrixError(ValueError):
    pass


class RationalMatrix:
    """Immutable ``rows x cols`` matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None, scale=None):
        entries = []
        for r in data:
            row = tuple(parse_rational(x) for x in r)
            if scale is not None:
                row = tuple(x * scale for x in row)
            entries.append(row)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix")
        self.rows = len(entries)
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> RationalMatrix:
        if not columns:
            return cls([[] for _ in range(rows or 0)], cols=0)
        return cls([list(r) for r in zip(*columns)], cols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def row_list(self) -> list[tuple]:
        return list(self.entries)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"

    def __str__(self):
        cells = [[format_rational(x) for x in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> RationalMatrix:
        if not self.rows:
            return RationalMatrix([[] for _ in range(self.cols)], cols=0)
        return RationalMatrix(list(zip(*self.entries)), cols=self.rows)

    @property
    def T(self) -> RationalMatrix:
        return self.transpose()

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], cols=self.cols)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], cols=self.cols)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> RationalMatrix:
        c = Fraction(c)
        return RationalMatrix([[x * c for x in r] for r in self.entries], cols=self.cols)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            ocols = other.columns()
            return RationalMatrix(
                [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ocols] for r in self.entries],
                cols=other.cols,
            )
        return self.apply(other)

    def apply(self, vector: Sequence) -> list:
        """Matrix-vector product; vector entries may be any ring elements."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for a matrix with {self.cols} columns")
        out = []
        for r in self.entries:
            acc = Fraction(0)
            for a, x in zip(r, vector):
                if a:
                    acc = acc + a * x
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RationalMatrix.identity(self.rows)

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> RationalMatrix:
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else list(cols)
        return RationalMatrix([[self.entries[i][j] for j in cols] for i in rows], cols=len(cols))

    def nonzero_rows(self) -> RationalMatrix:
        return RationalMatrix([r for r in self.entries if any(r)], cols=self.cols)

    def rank(self) -> int:
        return len(rref(self)[1])

    def __pow__(self, e: int) -> RationalMatrix:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = RationalMatrix.identity(self.rows)
        for _ in range(e):
            out = out @ self
        return out


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RationalMatrix(a, cols=m.cols), pivots


def rank(m: RationalMatrix) -> int:
    return m.rank()


def kernel_basis(m: RationalMatrix) -> RationalMatrix:
    """Columns span ker m; one column per free variable, which is set to 1."""
    red, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    cols = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        cols.append(v)
    return RationalMatrix.from_columns(cols, rows=m.cols) if cols else RationalMatrix.zeros(m.cols, 0)


def solve_inverse(m: RationalMatrix) -> RationalMatrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = hconcat(m, RationalMatrix.identity(n))
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return red.submatrix(cols=range(n, 2 * n))


def right_inverse(b: RationalMatrix) -> RationalMatrix:
    """Canonical C with b C = I, supported on the pivot columns of b."""
    _, pivots = rref(b)
    if len(pivots) != b.rows:
        raise SingularMatrixError(f"matrix has rank {len(pivots)} < {b.rows} rows; no right inverse")
    square = b.submatrix(cols=pivots)
    inv = solve_inverse(square)
    out = [[Fraction(0)] * b.rows for _ in range(b.cols)]
    for k, p in enumerate(pivots):
        out[p] = list(inv.row(k))
    return RationalMatrix(out, cols=b.rows)


def hconcat(left: RationalMatrix, right: RationalMatrix) -> RationalMatrix:
    if left.rows != right.rows:
        raise ValueError(f"row count mismatch: {left.rows} vs {right.rows}")
    return RationalMatrix([a + b for a, b in zip(left.entries, right.entries)], cols=left.cols + right.cols)


def vconcat(top: RationalMatrix, bottom: RationalMatrix) -> RationalMatrix:
    if top.cols != bottom.cols:
        raise ValueError(f"column count mismatch: {top.cols} vs {bottom.cols}")
    return RationalMatrix(list(top.entries) + list(bottom.entries), cols=top.cols)
