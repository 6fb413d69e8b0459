"""Exact scalar arithmetic and dense linear algebra over Q and F_p.

Scalars are plain Python values: :class:`fractions.Fraction` over the
rationals, ``int`` residues in ``[0, p)`` over a prime field.  A
:class:`FieldSpec` knows how to bring a value into canonical form; a
:class:`Matrix` carries its field so that every operation stays inside it.

Pivot order is always "first nonzero entry, scanning columns left to right",
so every basis returned here is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "FieldSpec", "QQ", "GF", "Matrix", "Vector",
    "rref", "rank", "kernel_basis", "image_basis", "solve", "kron",
    "span_rank", "same_span", "span_contains", "row_reduce_basis", "inverse",
]

Vector = tuple


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "rationals" | "prime_field"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == "prime_field":
            p = self.characteristic
            if not _is_prime(p) or p >= 2 ** 31:
                raise ValueError(f"characteristic must be a prime below 2^31, got {p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, x):
        """Canonical representative of ``x`` (int, Fraction or string)."""
        if isinstance(x, str):
            return self.parse(x)
        p = self.characteristic
        if p == 0:
            return x if type(x) is Fraction else Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator % p) * pow(x.denominator % p, -1, p) % p
        return x % p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def div(self, a, b):
        return self(a * self.inv(b))

    def parse(self, s: str):
        s = s.strip()
        if self.characteristic == 0:
            return Fraction(s)
        if "mod" in s:
            val, _, mod = s.partition("mod")
            if int(mod) != self.characteristic:
                raise ValueError(f"scalar {s!r} is not over F_{self.characteristic}")
            s = val
        return self(Fraction(s.strip()))

    def format(self, x) -> str:
        if self.characteristic == 0:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return f"{x % self.characteristic} mod {self.characteristic}"

    def label(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"

    @classmethod
    def from_label(cls, label: str) -> "FieldSpec":
        label = label.strip().lower()
        if label in ("q", "qq", "rationals"):
            return QQ
        if label.startswith("fp:"):
            return GF(int(label[3:]))
        raise ValueError(f"unknown field label {label!r}")


QQ = FieldSpec("rationals", 0)


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime_field", p)


class Matrix:
    """Dense matrix over a :class:`FieldSpec`, stored row-major.

    Treat instances as immutable; every operation returns a new matrix.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data=None, *, _trusted=False):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero()
            self.data = tuple(tuple(z for _ in range(cols)) for _ in range(rows))
        elif _trusted:
            self.data = data
        else:
            data = tuple(tuple(field(x) for x in row) for row in data)
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError(f"entry count does not match {rows}x{cols}")
            self.data = data

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = list(columns)
        nrows = rows if rows is not None else (len(columns[0]) if columns else 0)
        data = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(field, nrows, len(columns), data)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), _trusted=True)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols)

    # basic protocol ---------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols} [{body}])"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)), _trusted=True)

    T = property(transpose)

    # arithmetic -------------------------------------------------------
    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        F = self.field
        return Matrix(F, self.rows, self.cols,
                      tuple(tuple(F(a + b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)), _trusted=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F(c)
        return Matrix(F, self.rows, self.cols, tuple(tuple(F(c * x) for x in r) for r in self.data), _trusted=True)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.cols != other.rows:
                raise ValueError(f"cannot compose {self.shape} with {other.shape}")
            F = self.field
            p = F.characteristic
            ocols = other.cols
            odata = other.data
            out = []
            for row in self.data:
                acc = [0] * ocols
                for a, orow in zip(row, odata):
                    if a:
                        for j, b in enumerate(orow):
                            if b:
                                acc[j] += a * b
                if p:
                    out.append(tuple(x % p for x in acc))
                else:
                    out.append(tuple(Fraction(x) for x in acc))
            return Matrix(F, self.rows, ocols, tuple(out), _trusted=True)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        F = self.field
        out = []
        for row in self.data:
            s = 0
            for a, b in zip(row, v):
                if a and b:
                    s += a * b
            out.append(F(s))
        return tuple(out)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      tuple(a + b for a, b in zip(self.data, other.data)), _trusted=True)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.data + other.data, _trusted=True)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, len(rows), len(cols),
                      tuple(tuple(self.data[i][j] for j in cols) for i in rows), _trusted=True)

    def trace(self):
        return self.field(sum(self.data[i][i] for i in range(min(self.rows, self.cols))))

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def flat(self) -> Vector:
        return tuple(x for row in self.data for x in row)

    def rank(self) -> int:
        return rank(self)


# elimination ----------------------------------------------------------

def _rref_rows(field: FieldSpec, rows: list[list], ncols: int, rhs: list | None = None):
    """In-place reduced row echelon form; returns pivot columns."""
    p = field.characteristic
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            if rhs is not None:
                rhs[r], rhs[piv] = rhs[piv], rhs[r]
        prow = rows[r]
        inv = field.inv(prow[c])
        if inv != 1:
            prow = [field(x * inv) if x else x for x in prow]
            rows[r] = prow
            if rhs is not None:
                rhs[r] = field(rhs[r] * inv)
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                continue
            if p:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
            else:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
            if rhs is not None:
                rhs[i] = field(rhs[i] - f * rhs[r])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(m.field, rows, m.cols)
    return Matrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in rows), _trusted=True), pivots


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.data]
    return len(_rref_rows(m.field, rows, m.cols))


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column in increasing order."""
    F = m.field
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(F, rows, m.cols)
    pivset = set(pivots)
    z, one = F.zero(), F.one()
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [z] * m.cols
        v[free] = one
        for r, pc in enumerate(pivots):
            if rows[r][free] != 0:
                v[pc] = F(-rows[r][free])
        basis.append(tuple(v))
    return basis


def image_basis(m: Matrix) -> list[Vector]:
    """Pivot columns of ``m``: an independent spanning set of its column space."""
    _, pivots = rref(m)
    return [m.column(j) for j in pivots]


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some ``x`` with ``m x = b`` (free variables zero), or None."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    F = m.field
    rows = [list(r) for r in m.data]
    rhs = [F(x) for x in b]
    pivots = _rref_rows(F, rows, m.cols, rhs)
    for i in range(len(pivots), m.rows):
        if rhs[i] != 0:
            return None
    x = [F.zero()] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rhs[r]
    return tuple(x)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row/column (i, j) of the result sits at i * dim_b + j."""
    a._check(b)
    F = a.field
    z = F.zero()
    zero_block = (z,) * b.cols
    data = []
    for arow in a.data:
        for brow in b.data:
            row = []
            for x in arow:
                # most structure matrices are sparse; skip the products with zero
                row.extend(zero_block if x == 0 else (F(x * y) if y != 0 else z for y in brow))
            data.append(tuple(row))
    return Matrix(F, a.rows * b.rows, a.cols * b.cols, tuple(data), _trusted=True)


# spans of vector lists ------------------------------------------------

def row_reduce_basis(field: FieldSpec, vectors: Iterable[Sequence], dim: int) -> list[Vector]:
    """Reduced echelon basis (as rows) of the span of ``vectors``."""
    rows = [list(v) for v in vectors]
    if not rows:
        return []
    pivots = _rref_rows(field, rows, dim)
    return [tuple(rows[i]) for i in range(len(pivots))]


def span_rank(field: FieldSpec, vectors: Iterable[Sequence], dim: int) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    return len(_rref_rows(field, rows, dim))


def same_span(field: FieldSpec, u: Sequence[Sequence], v: Sequence[Sequence], dim: int) -> bool:
    return row_reduce_basis(field, u, dim) == row_reduce_basis(field, v, dim)


def span_contains(field: FieldSpec, big: Sequence[Sequence], small: Sequence[Sequence], dim: int) -> bool:
    r = span_rank(field, big, dim)
    return span_rank(field, list(big) + list(small), dim) == r


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    F = m.field
    n = m.rows
    aug = [list(r) + [F(1 if i == j else 0) for j in range(n)] for i, r in enumerate(m.data)]
    pivots = _rref_rows(F, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(F, n, n, tuple(tuple(r[n:]) for r in aug), _trusted=True)
