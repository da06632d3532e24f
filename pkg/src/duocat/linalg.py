"""Exact matrices over the rationals or a prime field.

Matrices are immutable and stored column-sparse: each column is a dict from
row index to a nonzero field element.  Rationals are kept as ``int`` when
integral and as ``fractions.Fraction`` otherwise, so the common 0/1 structure
matrices never pay for Fraction arithmetic.  Residues mod p are plain ints in
``[0, p)``.

    >>> a = Mat.from_rows([[1, 2], [3, 4]])
    >>> b = Mat.from_rows([[0, 1], [1, 0]])
    >>> (a @ b).to_lists()
    [[2, 1], [4, 3]]
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class NotIdempotent(ValueError):
    """Raised by :func:`split_idempotent`; ``index`` is a column of e·e − e that is nonzero."""

    def __init__(self, index: int):
        super().__init__(f"matrix is not idempotent (column {index} of e*e - e is nonzero)")
        self.index = index


class Rationals:
    name = "Q"
    char = 0

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    @staticmethod
    def norm(x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def coerce(self, x):
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return self.norm(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.norm(Fraction(1) / x)

    def parse(self, text: str):
        m = re.fullmatch(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*", text)
        if not m:
            raise ValueError(f"not a rational literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return self.norm(Fraction(num, den))

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"GF({p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name

    def norm(self, x):
        return x % self.p

    def coerce(self, x):
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def parse(self, text: str):
        m = re.fullmatch(r"\s*(-?\d+)\s*mod\s*(\d+)\s*", text)
        if m:
            if int(m.group(2)) != self.p:
                raise FieldMismatch(f"literal {text!r} is not over {self.name}")
            return int(m.group(1)) % self.p
        return self.coerce(Rationals().parse(text))

    def format(self, x) -> str:
        return f"{x} mod {self.p}"


QQ = Rationals()


class Mat:
    """An immutable exact matrix with ``rows`` × ``cols`` entries over ``field``."""

    __slots__ = ("rows", "cols", "field", "_cols")

    def __init__(self, rows: int, cols: int, columns: Sequence[dict], field=QQ):
        self.rows = rows
        self.cols = cols
        self.field = field
        self._cols = tuple(columns)
        if len(self._cols) != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {len(self._cols)}")

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field=QQ, ncols: int | None = None) -> Mat:
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if nrows else 0
        columns = [dict() for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch(f"row {i} has length {len(row)}, expected {ncols}")
            for j, x in enumerate(row):
                v = field.coerce(x)
                if v != 0:
                    columns[j][i] = v
        return cls(nrows, ncols, columns, field)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict, field=QQ) -> Mat:
        """Build from a ``{(i, j): value}`` dict."""
        columns = [dict() for _ in range(cols)]
        for (i, j), x in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatch(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = field.coerce(x)
            if v != 0:
                columns[j][i] = v
        return cls(rows, cols, columns, field)

    @classmethod
    def identity(cls, n: int, field=QQ) -> Mat:
        return cls(n, n, [{j: 1} for j in range(n)], field)

    @classmethod
    def zero(cls, rows: int, cols: int, field=QQ) -> Mat:
        return cls(rows, cols, [{} for _ in range(cols)], field)

    @classmethod
    def permutation(cls, images: Sequence[int], rows: int | None = None, field=QQ) -> Mat:
        """Column j has a single 1 in row ``images[j]``."""
        n = len(images)
        rows = n if rows is None else rows
        return cls(rows, n, [{i: 1} for i in images], field)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> dict:
        return dict(self._cols[j])

    def column_list(self, j: int) -> list:
        col = self._cols[j]
        return [col.get(i, 0) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self._cols[j].get(i, 0)

    @property
    def entries(self) -> tuple:
        """Row-major tuple of row tuples."""
        return tuple(tuple(r) for r in self.to_lists())

    def to_lists(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def is_zero(self) -> bool:
        return all(not c for c in self._cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f"Mat({self.to_lists()})"
        return f"Mat<{self.rows}x{self.cols}, nnz={self.nnz()}>"

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.shape == other.shape and self.field == other.field
                and self._cols == other._cols)

    __hash__ = None

    def first_difference(self, other: Mat) -> int | None:
        """Smallest column index where ``self`` and ``other`` differ, or None."""
        self._check_same_shape(other)
        for j, (a, b) in enumerate(zip(self._cols, other._cols)):
            if a != b:
                return j
        return None

    # arithmetic

    def _check_field(self, other: Mat):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _check_same_shape(self, other: Mat):
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __matmul__(self, other: Mat) -> Mat:
        return mat_mul(self, other)

    def __add__(self, other: Mat) -> Mat:
        self._check_same_shape(other)
        norm = self.field.norm
        columns = []
        for a, b in zip(self._cols, other._cols):
            col = dict(a)
            for i, v in b.items():
                s = norm(col.get(i, 0) + v)
                if s:
                    col[i] = s
                else:
                    col.pop(i, None)
            columns.append(col)
        return Mat(self.rows, self.cols, columns, self.field)

    def __neg__(self) -> Mat:
        norm = self.field.norm
        return Mat(self.rows, self.cols,
                   [{i: norm(-v) for i, v in c.items()} for c in self._cols], self.field)

    def __sub__(self, other: Mat) -> Mat:
        return self + (-other)

    def scale(self, s) -> Mat:
        s = self.field.coerce(s)
        if s == 0:
            return Mat.zero(self.rows, self.cols, self.field)
        norm = self.field.norm
        return Mat(self.rows, self.cols,
                   [{i: norm(v * s) for i, v in c.items()} for c in self._cols], self.field)

    def transpose(self) -> Mat:
        columns = [dict() for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                columns[i][j] = v
        return Mat(self.cols, self.rows, columns, self.field)

    @property
    def T(self) -> Mat:
        return self.transpose()

    def kron(self, other: Mat) -> Mat:
        """Kronecker product, left factor major."""
        self._check_field(other)
        norm = self.field.norm
        r2, c2 = other.rows, other.cols
        columns = []
        for a in self._cols:
            for b in other._cols:
                col = {}
                for i1, v in a.items():
                    base = i1 * r2
                    for i2, w in b.items():
                        col[base + i2] = norm(v * w)
                columns.append(col)
        return Mat(self.rows * r2, self.cols * c2, columns, self.field)

    def block_diag(self, *others: Mat) -> Mat:
        mats = (self,) + others
        rows = sum(m.rows for m in mats)
        columns = []
        off = 0
        for m in mats:
            self._check_field(m)
            columns.extend({i + off: v for i, v in c.items()} for c in m._cols)
            off += m.rows
        return Mat(rows, len(columns), columns, self.field)

    def hstack(self, *others: Mat) -> Mat:
        columns = list(self._cols)
        for m in others:
            self._check_field(m)
            if m.rows != self.rows:
                raise DimensionMismatch("hstack needs equal row counts")
            columns.extend(m._cols)
        return Mat(self.rows, len(columns), columns, self.field)

    def vstack(self, *others: Mat) -> Mat:
        return self.T.hstack(*(m.T for m in others)).T

    def select_columns(self, idx: Iterable[int]) -> Mat:
        idx = list(idx)
        return Mat(self.rows, len(idx), [self._cols[j] for j in idx], self.field)

    def select_rows(self, idx: Iterable[int]) -> Mat:
        idx = list(idx)
        where = {i: k for k, i in enumerate(idx)}
        columns = [{where[i]: v for i, v in c.items() if i in where} for c in self._cols]
        return Mat(len(idx), self.cols, columns, self.field)

    def rank(self) -> int:
        return len(_rref(self)[1])


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Exact product ``a·b``."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    norm = a.field.norm
    acols = a._cols
    columns = []
    for bcol in b._cols:
        acc = {}
        for k, v in bcol.items():
            for i, w in acols[k].items():
                acc[i] = acc.get(i, 0) + w * v
        col = {}
        for i, x in acc.items():
            x = norm(x)
            if x:
                col[i] = x
        columns.append(col)
    return Mat(a.rows, b.cols, columns, a.field)


def _rref(m: Mat):
    """Reduced row echelon form as a list of row dicts, plus the pivot columns.

    Pivots are chosen as the first nonzero entry scanning columns left to right
    and rows top to bottom.
    """
    field = m.field
    norm = field.norm
    rows = [dict() for _ in range(m.rows)]
    for j, col in enumerate(m._cols):
        for i, v in col.items():
            rows[i][j] = v
    pivots = []
    r = 0
    for j in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if rows[i].get(j, 0) != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = field.inv(rows[r][j])
        if inv != 1:
            rows[r] = {k: norm(v * inv) for k, v in rows[r].items()}
        prow = rows[r]
        for i in range(m.rows):
            if i == r:
                continue
            f = rows[i].get(j, 0)
            if f == 0:
                continue
            row = rows[i]
            for k, v in prow.items():
                x = norm(row.get(k, 0) - f * v)
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
        pivots.append(j)
        r += 1
    return rows[:r], pivots


def rank_factorization(m: Mat) -> tuple[Mat, Mat]:
    """Return ``(c, r)`` with ``m = c·r``, ``c`` of full column rank and ``r`` of full row rank.

    ``r`` is the nonzero part of the reduced row echelon form and ``c`` collects
    the pivot columns of ``m``.

    >>> c, r = rank_factorization(Mat.from_rows([[1, 1], [1, 1]]))
    >>> c.to_lists(), r.to_lists()
    ([[1], [1]], [[1, 1]])
    """
    rrows, pivots = _rref(m)
    k = len(pivots)
    r = Mat(k, m.cols, [{i: row[j] for i, row in enumerate(rrows) if j in row}
                        for j in range(m.cols)], m.field)
    c = m.select_columns(pivots)
    return c, r


@dataclass(frozen=True)
class Splitting:
    """``iota·pi`` is the split idempotent and ``pi·iota`` is the identity on the retract."""

    retract_dim: int
    pi: Mat
    iota: Mat
    pivots: tuple = ()

    @property
    def idempotent(self) -> Mat:
        return self.iota @ self.pi


def split_idempotent(e: Mat) -> Splitting:
    if not e.is_square():
        raise DimensionMismatch(f"idempotent must be square, got {e.shape}")
    bad = (e @ e).first_difference(e)
    if bad is not None:
        raise NotIdempotent(bad)
    rrows, pivots = _rref(e)
    r = Mat(len(pivots), e.cols, [{i: row[j] for i, row in enumerate(rrows) if j in row}
                                  for j in range(e.cols)], e.field)
    return Splitting(len(pivots), r, e.select_columns(pivots), tuple(pivots))


@dataclass(frozen=True)
class NotInvertible:
    kernel_dim: int
    cokernel_dim: int


def try_invert(m: Mat) -> Mat | NotInvertible:
    """Two-sided inverse of ``m``, or the kernel and cokernel dimensions when there is none."""
    rk = m.rank()
    if not (m.is_square() and rk == m.rows):
        return NotInvertible(m.cols - rk, m.rows - rk)
    n = m.rows
    aug = Mat(n, 2 * n, list(m._cols) + [{j: 1} for j in range(n)], m.field)
    rrows, _ = _rref(aug)
    inv = Mat(n, n, [{i: row[n + j] for i, row in enumerate(rrows) if n + j in row}
                     for j in range(n)], m.field)
    return inv


def kernel(m: Mat) -> Mat:
    """Columns form a basis of the null space of ``m``."""
    rrows, pivots = _rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    columns = []
    for f in free:
        col = {f: 1}
        for row, p in zip(rrows, pivots):
            v = row.get(f, 0)
            if v:
                col[p] = m.field.norm(-v)
        columns.append(col)
    return Mat(m.cols, len(free), columns, m.field)


def solve(a: Mat, b: Mat) -> Mat | None:
    """Some ``x`` with ``a·x = b``, or None when the system is inconsistent."""
    if a.rows != b.rows:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    n = a.cols
    aug = a.hstack(b)
    rrows, pivots = _rref(aug)
    if any(p >= n for p in pivots):
        return None
    columns = []
    for j in range(b.cols):
        col = {}
        for row, p in zip(rrows, pivots):
            v = row.get(n + j, 0)
            if v:
                col[p] = v
        columns.append(col)
    return Mat(n, b.cols, columns, a.field)
