"""Exact matrices indexed by point sets, and the multivariate Pascal family.

Entries are Python ints, Fractions or :class:`~multipascal.poly.Polynomial`
values; the same kernels serve all three.  Rows and columns carry labels:
points of a :class:`PointSet`, or plain integers 0..l for the Stirling and
Vandermonde matrices.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import DimensionMismatch, MissingValue, NonIntegralEntry, NonNilpotent
from .mindex import box, multi_binom
from .pointset import PointSet


class ExactMatrix:
    """Dense immutable matrix with labelled rows and columns.

    ``rows`` is a tuple of row tuples.  Labels default to ``range``.
    """

    __slots__ = ("rows", "row_labels", "col_labels", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], row_labels=None, col_labels=None):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (len(col_labels) if col_labels is not None else 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged rows")
        self.row_labels = tuple(row_labels) if row_labels is not None else tuple(range(self.nrows))
        self.col_labels = tuple(col_labels) if col_labels is not None else tuple(range(self.ncols))
        if len(self.row_labels) != self.nrows or len(self.col_labels) != self.ncols:
            raise DimensionMismatch("label count does not match shape")

    @classmethod
    def from_function(cls, row_labels, col_labels, f: Callable) -> "ExactMatrix":
        rows = [[f(a, b) for b in col_labels] for a in row_labels]
        return cls(rows, row_labels, col_labels)

    @classmethod
    def identity(cls, labels) -> "ExactMatrix":
        labels = tuple(labels)
        return cls([[int(i == j) for j in range(len(labels))] for i in range(len(labels))],
                   labels, labels)

    @classmethod
    def diag(cls, values, labels=None) -> "ExactMatrix":
        values = list(values)
        r = len(values)
        return cls([[values[i] if i == j else 0 for j in range(r)] for i in range(r)],
                   labels, labels)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, row_label, col_label):
        return self.rows[self.row_labels.index(row_label)][self.col_labels.index(col_label)]

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self):
        body = "\n ".join(str([str(x) for x in r]) for r in self.rows)
        return f"ExactMatrix(\n {body})"

    def map(self, f: Callable) -> "ExactMatrix":
        return ExactMatrix([[f(x) for x in r] for r in self.rows], self.row_labels, self.col_labels)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)) if self.rows else [],
                           self.col_labels, self.row_labels)

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        _same_shape(self, other)
        return ExactMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                           self.row_labels, self.col_labels)

    def __sub__(self, other):
        _same_shape(self, other)
        return ExactMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                           self.row_labels, self.col_labels)

    def scale(self, c) -> "ExactMatrix":
        return self.map(lambda x: x * c)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __pow__(self, p: int):
        return matrix_power(self, p)

    # structure

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def is_upper_triangular(self) -> bool:
        return self.transpose().is_lower_triangular()

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self.is_square() and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def determinant(self):
        return determinant(self)

    def inverse(self) -> "ExactMatrix":
        return inverse(self)


def _same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact product; zero entries are skipped on both sides."""
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    b_nonzero = [[(j, x) for j, x in enumerate(r) if x] for r in b.rows]
    out = []
    for row in a.rows:
        acc = [0] * b.ncols
        for k, x in enumerate(row):
            if x:
                for j, y in b_nonzero[k]:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return ExactMatrix(out, a.row_labels, b.col_labels)


def mat_vec(a: ExactMatrix, v: Sequence) -> list:
    """Matrix times a column vector; entries may be Polynomials."""
    v = list(v)
    if len(v) != a.ncols:
        raise DimensionMismatch(f"vector of length {len(v)} for {a.shape} matrix")
    out = []
    for row in a.rows:
        acc = 0
        for x, y in zip(row, v):
            if x:
                acc = acc + x * y
        out.append(acc)
    return out


def transpose(a: ExactMatrix) -> ExactMatrix:
    return a.transpose()


def matrix_power(a: ExactMatrix, p: int) -> ExactMatrix:
    """a**p by repeated squaring; negative p goes through the exact inverse."""
    if not a.is_square():
        raise DimensionMismatch("power of a non-square matrix")
    if p < 0:
        a, p = inverse(a), -p
    out = ExactMatrix.identity(a.row_labels)
    out = ExactMatrix(out.rows, a.row_labels, a.col_labels)
    while p:
        if p & 1:
            out = out @ a
        a = a @ a
        p >>= 1
    return out


def determinant_triangular(a: ExactMatrix):
    if not a.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    if not (a.is_lower_triangular() or a.is_upper_triangular()):
        raise ValueError("matrix is not triangular")
    return math.prod((a.rows[i][i] for i in range(a.nrows)), start=1)


def bareiss_determinant(rows) -> int:
    """Fraction-free elimination; every division is exact over the integers."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def determinant(a: ExactMatrix):
    """Exact determinant of an int or Fraction matrix."""
    if not a.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    if a.is_lower_triangular() or a.is_upper_triangular():
        return determinant_triangular(a)
    entries = [x for r in a.rows for x in r]
    if all(isinstance(x, int) for x in entries):
        return bareiss_determinant(a.rows)
    # clear denominators, then stay fraction-free
    scale = math.lcm(*(Fraction(x).denominator for x in entries))
    rows = [[int(Fraction(x) * scale) for x in r] for r in a.rows]
    return Fraction(bareiss_determinant(rows), scale ** a.nrows)


def _lower_triangular_inverse(rows) -> list:
    """Forward substitution; stays in the integers when the diagonal is +-1."""
    n = len(rows)
    nonzero = [[(k, x) for k, x in enumerate(r[:i]) if x] for i, r in enumerate(rows)]
    out = []
    for i in range(n):
        d = rows[i][i]
        if not d:
            raise ZeroDivisionError("matrix is singular")
        row = [0] * n
        row[i] = 1
        for k, x in nonzero[i]:
            xk = out[k]
            for j in range(k + 1):
                if xk[j]:
                    row[j] -= x * xk[j]
        if d in (1, -1):
            row = [v * d for v in row]
        else:
            row = [Fraction(v, 1) / d for v in row]
            row = [v.numerator if v.denominator == 1 else v for v in row]
        out.append(row)
    return out


def inverse(a: ExactMatrix) -> ExactMatrix:
    """Exact inverse.

    Triangular matrices use substitution; anything else goes through
    Gauss-Jordan over the rationals.  Integral results come back as ints.
    """
    if not a.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    if a.is_lower_triangular():
        return ExactMatrix(_lower_triangular_inverse(a.rows), a.col_labels, a.row_labels)
    if a.is_upper_triangular():
        return inverse(a.transpose()).transpose()
    n = a.nrows
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(a.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv_p = 1 / m[col][col]
        m[col] = [x * inv_p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    rows = [[x.numerator if x.denominator == 1 else x for x in r[n:]] for r in m]
    return ExactMatrix(rows, a.col_labels, a.row_labels)


# --- Pascal matrices -------------------------------------------------------

def _square(R: PointSet, f) -> ExactMatrix:
    if len(R) == 0:
        raise ValueError("point set is empty")
    pts = R.points
    return ExactMatrix([[f(a, b) for b in pts] for a in pts], pts, pts)


def build_L(R: PointSet) -> ExactMatrix:
    """Lower-triangular Pascal matrix: entry (k_i, k_j) = C(k_i, k_j)."""
    return _square(R, multi_binom)


def build_U(R: PointSet) -> ExactMatrix:
    return build_L(R).transpose()


def build_S(R: PointSet) -> ExactMatrix:
    """Symmetric Pascal matrix: entry (k_i, k_j) = C(k_i + k_j, k_i)."""
    return _square(R, lambda a, b: multi_binom(a + b, a))


def build_D(R: PointSet, p: int = -1) -> ExactMatrix:
    """diag(p^{|k|}); the default p = -1 gives the sign matrix."""
    return ExactMatrix.diag([p ** k.degree for k in R.points], R.points)


def build_L_power(R: PointSet, p: int) -> ExactMatrix:
    """L_R**p from the closed form p^{|k_i|-|k_j|} C(k_i, k_j).

    p = 0 is the identity outright, since the diagonal conjugation that
    produces the closed form is singular there.
    """
    if p not in (0, 1):
        R.require_monomial_condition()
    if p == 0:
        return ExactMatrix.identity(R.points)

    def entry(a, b):
        c = multi_binom(a, b)
        return c * p ** (a.degree - b.degree) if c else 0

    return _square(R, entry)


def build_U_power(R: PointSet, p: int) -> ExactMatrix:
    return build_L_power(R, p).transpose()


def build_A(R: PointSet) -> ExactMatrix:
    """Creation matrix: C(k_i, k_j) where |k_i| = |k_j| + 1, zero elsewhere."""
    return _square(R, lambda a, b: multi_binom(a, b) if a.degree == b.degree + 1 else 0)


def matrix_exponential_nilpotent(A: ExactMatrix, p: int = 1, *, integral: bool = True) -> ExactMatrix:
    """exp(p A) = sum_m p^m A^m / m! for nilpotent square A.

    Powers are accumulated exactly and divided by m! at the end of each
    step.  With ``integral`` set, a division that leaves a remainder raises
    NonIntegralEntry; otherwise Fractions are kept.
    """
    if not A.is_square():
        raise DimensionMismatch("exponential of a non-square matrix")
    size = A.nrows
    result = [list(r) for r in ExactMatrix.identity(A.row_labels).rows]
    power = A
    m = 1
    while not power.is_zero():
        if m > size:
            raise NonNilpotent(f"A^{size} is not zero")
        fact = math.factorial(m)
        pm = p ** m
        for i, r in enumerate(power.rows):
            for j, x in enumerate(r):
                if not x:
                    continue
                num = x * pm
                if integral:
                    q, rem = divmod(num, fact)
                    if rem:
                        raise NonIntegralEntry(f"A^{m}[{i},{j}] * {pm} / {m}! is not an integer")
                    result[i][j] += q
                else:
                    result[i][j] += Fraction(num, fact)
        power = power @ A
        m += 1
    return ExactMatrix(result, A.row_labels, A.col_labels)


def nilpotency_index(A: ExactMatrix) -> int:
    """Smallest m >= 1 with A^m = 0."""
    size = A.nrows
    power, m = A, 1
    while not power.is_zero():
        if m > size:
            raise NonNilpotent(f"A^{size} is not zero")
        power = power @ A
        m += 1
    return m


# --- binomial transform ----------------------------------------------------

def binomial_transform(R: PointSet, seq: Mapping, inverse: bool = False) -> dict:
    """b_k = sum_{i <= k} C(k, i) a_i over a downward-closed R.

    With ``inverse`` the terms carry the sign (-1)^{|k| - |i|}.  ``seq`` maps
    multi-indices (or plain tuples) to ring elements.
    """
    R.require_monomial_condition()
    values = {}
    for k in R.points:
        if k not in seq:
            raise MissingValue(f"no sequence value at {tuple(k)}")
        values[k] = seq[k]
    out = {}
    for k in R.points:
        acc = 0
        for i in box(k):
            c = multi_binom(k, i)
            if inverse and (k.degree - i.degree) % 2:
                c = -c
            acc = acc + c * values[i]
        out[k] = acc
    return out


def inverse_binomial_transform(R: PointSet, seq: Mapping) -> dict:
    return binomial_transform(R, seq, inverse=True)
