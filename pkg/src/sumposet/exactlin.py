"""Exact dense linear algebra over the rationals and prime fields.

Scalars are ``fractions.Fraction`` (rationals) or canonical residues in
``[0, p)`` (prime fields).  Everything is immutable and every operation is a
pure function, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .errors import InputError

Scalar = Union[Fraction, int]


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
    """Ground field: ``kind="rational"`` or ``kind="prime"`` with modulus p."""

    kind: str = "rational"
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "rational":
            if self.p is not None:
                raise InputError("rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise InputError(f"field modulus must be a prime >= 2, got {self.p!r}")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    def coerce(self, x) -> Scalar:
        """Canonicalize ``x`` into this field.

        Accepts ints, Fractions and ``"a/b"`` strings.  Floats are rejected:
        all arithmetic in this package is exact.
        """
        if isinstance(x, float):
            raise InputError("floating point values are not allowed")
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, bool):
            raise InputError("booleans are not field elements")
        if self.is_rational:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise InputError(f"cannot coerce {x!r} into the rationals")
        p = self.p
        assert p is not None
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise InputError(f"denominator of {x} is divisible by p={p}")
            return (x.numerator % p) * pow(x.denominator % p, -1, p) % p
        raise InputError(f"cannot coerce {x!r} into F_{p}")

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a if self.is_rational else pow(a, -1, self.p)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix with entries in a single field."""

    rows: int
    cols: int
    field: FieldSpec
    entries: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError("entry count does not match matrix shape")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise InputError("rows have differing lengths")
        elif cols is None:
            raise InputError("column count required for a matrix with no rows")
        entries = tuple(field.coerce(x) for row in rows for x in row)
        return cls(len(rows), cols, field, entries)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(n, n, field, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, field, (field.zero,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.field,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def stack(self, other: "Matrix") -> "Matrix":
        """Rows of self above rows of other."""
        if other.field != self.field:
            raise InputError("cannot stack matrices over different fields")
        if other.cols != self.cols:
            raise InputError("cannot stack matrices with different column counts")
        return Matrix(self.rows + other.rows, self.cols, self.field, self.entries + other.entries)

    def matmul(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise InputError("cannot multiply matrices over different fields")
        if self.cols != other.rows:
            raise InputError(f"shape mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}")
        f = self.field
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = f.zero
                for k in range(self.cols):
                    a = ri[k]
                    if a != 0:
                        acc = f.add(acc, f.mul(a, other[k, j]))
                out.append(acc)
        return Matrix(self.rows, other.cols, self.field, tuple(out))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.matmul(other)


class RrefResult(NamedTuple):
    reduced: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form via Gauss-Jordan elimination.

    The result is the unique RREF of ``m``; pivot columns come out strictly
    increasing.  Rational entries stay normalized (Fraction keeps lowest
    terms), prime-field entries stay in ``[0, p)``.
    """
    f = m.field
    a = m.row_lists()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = f.inv(a[r][c])
        if inv != 1:
            a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                arow = a[r]
                a[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[i], arow)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    reduced = Matrix(m.rows, m.cols, f, tuple(x for row in a for x in row))
    return RrefResult(reduced, r, tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> Matrix:
    """Basis of the null space of ``m``, returned as matrix columns.

    The column count is ``m.cols - rank(m)``; each free variable of the RREF
    yields one basis vector with 1 in its own slot.
    """
    f = m.field
    red, rk, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    cols = []
    for j in free:
        v = [f.zero] * m.cols
        v[j] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(red[r, j])
        cols.append(v)
    entries = tuple(cols[c][i] for i in range(m.cols) for c in range(len(cols)))
    return Matrix(m.cols, len(cols), f, entries)
