"""
Dense vectors and matrices over the rationals, with exact row reduction.
"""

from fractions import Fraction
from typing import List, Tuple

from pyOperadic.exactlin.scalars import to_scalar, format_scalar, ZERO, ONE


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class Vec:
    """
    An immutable coordinate vector with Fraction entries.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        self._entries = tuple(to_scalar(e) for e in entries)

    @classmethod
    def zeros(cls, dim: int) -> "Vec":
        return cls([ZERO] * dim)

    @classmethod
    def unit(cls, dim: int, i: int) -> "Vec":
        return cls([ONE if j == i else ZERO for j in range(dim)])

    @property
    def dim(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(("Vec", self._entries))

    def _check(self, other):
        if not isinstance(other, Vec):
            raise TypeError("Expected a Vec, not {}".format(type(other)))
        if other.dim != self.dim:
            raise DimensionError("Vector lengths differ: {} vs {}".format(self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        return Vec([a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other):
        self._check(other)
        return Vec([a - b for a, b in zip(self._entries, other._entries)])

    def __neg__(self):
        return Vec([-a for a in self._entries])

    def __mul__(self, c):
        c = to_scalar(c)
        return Vec([c * a for a in self._entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        # row vector times matrix
        if not isinstance(other, Mat):
            return NotImplemented
        if other.rows != self.dim:
            raise DimensionError("Cannot multiply vector of length {} by {}x{} matrix".format(
                self.dim, other.rows, other.cols))
        return Vec([
            sum((self._entries[i] * other[i, j] for i in range(other.rows)), ZERO)
            for j in range(other.cols)
        ])

    def dot(self, other) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self._entries, other._entries)), ZERO)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self._entries)

    def concat(self, other) -> "Vec":
        return Vec(self._entries + other._entries)

    def __repr__(self):
        return "Vec([{}])".format(", ".join(format_scalar(a) for a in self._entries))

    def __str__(self):
        return "(" + ", ".join(format_scalar(a) for a in self._entries) + ")"


class Mat:
    """
    An immutable rows x cols matrix with Fraction entries, stored row-major.
    """

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(to_scalar(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                "Expected {} entries for a {}x{} matrix, got {}".format(rows * cols, rows, cols, len(entries)))
        self._rows = rows
        self._cols = cols
        self._data = entries

    @classmethod
    def from_rows(cls, rows, cols: int = None) -> "Mat":
        rows = [list(r) for r in rows]
        if cols is None:
            if len(rows) == 0:
                raise DimensionError("Column count required for an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionError("Ragged rows: expected length {}, got {}".format(cols, len(r)))
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def from_columns(cls, columns, rows: int = None) -> "Mat":
        columns = [list(c) for c in columns]
        return cls.from_rows(columns, rows).T

    @classmethod
    def outer(cls, u: Vec, v: Vec) -> "Mat":
        return cls(u.dim, v.dim, [a * b for a in u for b in v])

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return self._data

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._rows, self._cols)

    def __getitem__(self, index):
        i, j = index
        return self._data[i * self._cols + j]

    def row(self, i: int) -> Vec:
        return Vec(self._data[i * self._cols:(i + 1) * self._cols])

    def col(self, j: int) -> Vec:
        return Vec(self._data[j::self._cols])

    def row_list(self) -> List[Vec]:
        return [self.row(i) for i in range(self._rows)]

    @property
    def T(self) -> "Mat":
        return Mat(self._cols, self._rows,
                   [self[i, j] for j in range(self._cols) for i in range(self._rows)])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(("Mat", self._rows, self._cols, self._data))

    def _check_shape(self, other):
        if not isinstance(other, Mat):
            raise TypeError("Expected a Mat, not {}".format(type(other)))
        if other.shape != self.shape:
            raise DimensionError("Matrix shapes differ: {} vs {}".format(self.shape, other.shape))

    def __add__(self, other):
        self._check_shape(other)
        return Mat(self._rows, self._cols, [a + b for a, b in zip(self._data, other._data)])

    def __sub__(self, other):
        self._check_shape(other)
        return Mat(self._rows, self._cols, [a - b for a, b in zip(self._data, other._data)])

    def __neg__(self):
        return Mat(self._rows, self._cols, [-a for a in self._data])

    def __mul__(self, c):
        c = to_scalar(c)
        return Mat(self._rows, self._cols, [c * a for a in self._data])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Vec):
            if other.dim != self._cols:
                raise DimensionError("Cannot multiply {}x{} matrix by vector of length {}".format(
                    self._rows, self._cols, other.dim))
            return Vec([self.row(i).dot(other) for i in range(self._rows)])
        if isinstance(other, Mat):
            if other.rows != self._cols:
                raise DimensionError("Cannot multiply {}x{} by {}x{}".format(
                    self._rows, self._cols, other.rows, other.cols))
            cols = [other.col(j) for j in range(other.cols)]
            return Mat(self._rows, other.cols,
                       [self.row(i).dot(c) for i in range(self._rows) for c in cols])
        return NotImplemented

    def flatten(self) -> Vec:
        return Vec(self._data)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self._data)

    def __repr__(self):
        return "Mat({}x{}, {})".format(self._rows, self._cols, [str(r) for r in self.row_list()])

    def __str__(self):
        if self._rows == 0:
            return "[]"
        return "[\n" + "\n".join("\t" + str(r) for r in self.row_list()) + "\n]"


def rref(m: Mat) -> Tuple[Mat, List[int]]:
    """
    Reduced row-echelon form of m and the pivot columns. Zero rows are kept at
    the bottom so the shape of m is preserved.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * a for a in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Mat(m.rows, m.cols, [a for row in rows for a in row]), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise DimensionError("Only square matrices have inverses, got {}x{}".format(m.rows, m.cols))
    n = m.rows
    aug = Mat.from_rows([list(m.row(i)) + list(Mat.identity(n).row(i)) for i in range(n)], 2 * n) \
        if n > 0 else Mat.zeros(0, 0)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("Matrix is singular")
    return Mat.from_rows([list(red.row(i))[n:] for i in range(n)], n) if n > 0 else Mat.zeros(0, 0)


def kron(a, b):
    """Kronecker product of two matrices or two vectors; index (i, j) maps to i*len(b)+j."""
    if isinstance(a, Vec) and isinstance(b, Vec):
        return Vec([x * y for x in a for y in b])
    if isinstance(a, Mat) and isinstance(b, Mat):
        rows = a.rows * b.rows
        cols = a.cols * b.cols
        return Mat(rows, cols, [
            a[i1, j1] * b[i2, j2]
            for i1 in range(a.rows) for i2 in range(b.rows)
            for j1 in range(a.cols) for j2 in range(b.cols)
        ])
    raise TypeError("kron expects two Vecs or two Mats")


def vstack(mats: List[Mat], cols: int) -> Mat:
    rows = [r for m in mats for r in m.row_list()]
    return Mat.from_rows(rows, cols)
