"""Exact Gaussian-rational scalars and dense matrices.

Everything in this module is exact: scalars are complex numbers whose real
and imaginary parts are arbitrary-precision fractions, and every matrix
operation (products, elimination, nullspaces, row-space comparison) is
carried out without any rounding.  Identity checks built on top of it are
therefore zero-tolerance by construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

Rational = int | Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}; pass int or Fraction")
    return Fraction(x)


class ExactComplex:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactComplex is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def i() -> "ExactComplex":
        return ExactComplex(0, 1)

    @staticmethod
    def coerce(x) -> "ExactComplex":
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactComplex(x)
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise TypeError(f"refusing inexact complex {x!r}")
            return ExactComplex(int(x.real), int(x.imag))
        raise TypeError(f"cannot coerce {type(x).__name__} to ExactComplex")

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "ExactComplex":
        return ExactComplex.coerce(other) - self

    def __mul__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other) -> "ExactComplex":
        return ExactComplex.coerce(other) / self

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- predicates / conversions -------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


EC_ZERO = ExactComplex(0)
EC_ONE = ExactComplex(1)
EC_I = ExactComplex(0, 1)


def fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        raise ValueError(f"fraction_sqrt of negative value {q}")
    if q == 0:
        return Fraction(0)
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class ExactMatrix:
    """Dense matrix over ExactComplex, immutable, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows <= 0 or cols <= 0:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        ents = tuple(ExactComplex.coerce(e) for e in entries)
        if len(ents) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(ents)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("from_rows needs at least one row")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"row {i} has length {len(r)}, expected {width}")
        return ExactMatrix(len(rows), width, [e for r in rows for e in r])

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols, [0] * (rows * cols))

    @staticmethod
    def diagonal(values: Iterable) -> "ExactMatrix":
        vals = list(values)
        n = len(vals)
        return ExactMatrix(
            n, n, [vals[i] if i == j else 0 for i in range(n) for j in range(n)]
        )

    @staticmethod
    def column(values: Iterable) -> "ExactMatrix":
        vals = list(values)
        return ExactMatrix(len(vals), 1, vals)

    # -- access -------------------------------------------------------
    def __getitem__(self, idx: tuple[int, int]) -> ExactComplex:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[ExactComplex, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[ExactComplex, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    # -- algebra ------------------------------------------------------
    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError(
                f"cannot subtract {other.rows}x{other.cols} from {self.rows}x{self.cols}"
            )
        return ExactMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, factor) -> "ExactMatrix":
        f = ExactComplex.coerce(factor)
        return ExactMatrix(self.rows, self.cols, [f * a for a in self.entries])

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = [EC_ZERO] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a.is_zero():
                    continue
                obase = k * other.cols
                for j in range(other.cols):
                    b = other.entries[obase + j]
                    if not b.is_zero():
                        out[i * other.cols + j] = out[i * other.cols + j] + a * b
        return ExactMatrix(self.rows, other.cols, out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [a.conjugate() for a in self.entries])

    def dagger(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return self.conj().transpose()

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(repr(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"ExactMatrix[{body}]"

    def to_numpy(self):
        import numpy as np

        return np.array(
            [[e.to_complex() for e in self.row(i)] for i in range(self.rows)]
        )


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b - b @ a


def anticommutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b + b @ a


# ---------------------------------------------------------------------------
# Elimination: reduced row echelon form, rank, nullspace, linear solve.
# ---------------------------------------------------------------------------


def _rref(rows: list[list[ExactComplex]]) -> tuple[list[list[ExactComplex]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for k in range(r, len(rows)):
            if not rows[k][col].is_zero():
                piv = k
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        if pv != EC_ONE:
            rows[r] = [x / pv for x in rows[r]]
        for k in range(len(rows)):
            if k != r:
                f = rows[k][col]
                if not f.is_zero():
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def matrix_rank(m: ExactMatrix) -> int:
    rows = [list(m.row(i)) for i in range(m.rows)]
    _, pivots = _rref(rows)
    return len(pivots)


def nullspace(m: ExactMatrix) -> tuple[list[ExactMatrix], int]:
    """Canonical nullspace basis (column vectors) and the rank of m.

    Basis vectors are the reduced-echelon ones: each has entry 1 in its free
    column and the negated pivot-column coefficients elsewhere, so the basis
    is deterministic and rank + nullity = cols exactly.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    rref_rows, pivots = _rref(rows)
    rank = len(pivots)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [EC_ZERO] * m.cols
        vec[fc] = EC_ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -rref_rows[r][fc]
        basis.append(ExactMatrix.column(vec))
    for v in basis:
        if not (m @ v).is_zero():
            raise AssertionError("internal error: nullspace vector fails m @ v = 0")
    return basis, rank


def solve(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix | None:
    """One exact solution x of a @ x = b (free variables set to 0), or None."""
    if b.rows != a.rows or b.cols != 1:
        raise ValueError(
            f"solve needs a {a.rows}x1 right-hand side, got {b.rows}x{b.cols}"
        )
    rows = [list(a.row(i)) + [b.entries[i]] for i in range(a.rows)]
    rref_rows, pivots = _rref(rows)
    if a.cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [EC_ZERO] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = rref_rows[r][a.cols]
    return ExactMatrix.column(x)


def rowspace_equal(a: ExactMatrix, b: ExactMatrix) -> bool:
    """True iff the row spans of a and b coincide, by exact rank comparison."""
    if a.cols != b.cols:
        raise ValueError(f"row width mismatch: {a.cols} vs {b.cols}")
    ra = matrix_rank(a)
    rb = matrix_rank(b)
    if ra != rb:
        return False
    stacked = ExactMatrix.from_rows(
        [list(a.row(i)) for i in range(a.rows)] + [list(b.row(i)) for i in range(b.rows)]
    )
    return matrix_rank(stacked) == ra


def in_span(vectors: Sequence[ExactMatrix], target: ExactMatrix) -> bool:
    """True iff target (a column vector) is a linear combination of vectors."""
    if not vectors:
        return target.is_zero()
    a = ExactMatrix.from_rows(
        [[v.entries[i] for v in vectors] for i in range(target.rows)]
    )
    return solve(a, target) is not None
