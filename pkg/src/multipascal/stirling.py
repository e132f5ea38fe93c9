"""Stirling numbers and Stirling polynomials of the second kind.

The polynomial S_k^{(l)}(x0, x1, ..., xn) is the coefficient of t^l / l! in
(1/k!) e^{x0 t} prod_j (e^{x_j t} - 1)^{k_j}.  Two independent routes are
provided: a closed formula through the numbers S(i, k), and a direct
expansion of the generating function.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .mindex import MultiIndex, compositions, multinomial
from .pascal import ExactMatrix, build_L
from .pointset import PointSet
from .poly import Polynomial

_table_lock = threading.Lock()
_table = [[1]]  # _table[n][k] = S(n, k) for 0 <= k <= n


def stirling_number(n: int, k: int) -> int:
    """S(n, k): partitions of an n-set into k nonempty blocks."""
    if n < 0 or k < 0:
        raise ValueError("negative argument")
    if k > n:
        return 0
    if n >= len(_table):
        with _table_lock:
            while len(_table) <= n:
                prev = _table[-1]
                m = len(_table)
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    row[j] = j * (prev[j] if j < m else 0) + prev[j - 1]
                _table.append(row)
    return _table[n][k]


@lru_cache(maxsize=None)
def _stirling_poly(k: tuple, ell: int) -> Polynomial:
    n = len(k)
    nvars = n + 1
    terms = {}
    spare = ell - sum(k)
    if spare < 0:
        return Polynomial({}, nvars)
    for extra in range(spare + 1):
        for d in compositions(n, extra):
            i = tuple(a + b for a, b in zip(k, d))
            c = multinomial(ell, i)
            for ij, kj in zip(i, k):
                c *= stirling_number(ij, kj)
            if c:
                terms[(ell - sum(i),) + i] = c
    return Polynomial(terms, nvars)


def stirling_poly(k, ell: int) -> Polynomial:
    """S_k^{(ell)} in variables x0..xn from the closed formula.

    Sums multinomial(ell; i) * prod_j S(i_j, k_j) * x0^{ell-|i|} x^i over
    i >= k with |i| <= ell.
    """
    return _stirling_poly(tuple(MultiIndex(k)), int(ell))


def _exp_series(var: Polynomial, order: int, drop_constant: bool = False) -> list:
    """Coefficients of e^{var * t} in t up to t^order."""
    coeffs = [var ** m / math.factorial(m) for m in range(order + 1)]
    if drop_constant:
        coeffs[0] = Polynomial({}, var.nvars)
    return coeffs


def _series_mul(a: list, b: list, order: int) -> list:
    out = [Polynomial({}, a[0].nvars) for _ in range(order + 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(order + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + x * b[j]
    return out


def stirling_poly_egf(k, ell: int) -> Polynomial:
    """S_k^{(ell)} read off the exponential generating function directly."""
    k = MultiIndex(k)
    nvars = k.n + 1
    series = _exp_series(Polynomial.var(0, nvars), ell)
    for j, kj in enumerate(k, start=1):
        factor = _exp_series(Polynomial.var(j, nvars), ell, drop_constant=True)
        for _ in range(kj):
            series = _series_mul(series, factor, ell)
    result = series[ell] * Fraction(math.factorial(ell), k.factorial())
    return result


def linear_form(k, nvars: int = None) -> Polynomial:
    """A_k = x0 + k1 x1 + ... + kn xn."""
    k = tuple(k)
    nvars = nvars or len(k) + 1
    out = Polynomial.var(0, nvars)
    for j, kj in enumerate(k, start=1):
        if kj:
            out = out + Polynomial.var(j, nvars) * kj
    return out


def build_stirling_matrix(R: PointSet, ell: int) -> ExactMatrix:
    """|R| x (ell+1) matrix with entry (k, j) = k! S_k^{(j)}."""
    cols = tuple(range(ell + 1))
    rows = [[stirling_poly(k, j) * k.factorial() for j in cols] for k in R.points]
    return ExactMatrix(rows, R.points, cols)


def build_vandermonde_matrix(R: PointSet, ell: int) -> ExactMatrix:
    """|R| x (ell+1) matrix with entry (k, j) = A_k^j."""
    cols = tuple(range(ell + 1))
    rows = []
    for k in R.points:
        a = linear_form(k)
        row, acc = [], Polynomial.constant(1, a.nvars)
        for _ in cols:
            row.append(acc)
            acc = acc * a
        rows.append(row)
    return ExactMatrix(rows, R.points, cols)


def factorial_stirling_numbers(m: int) -> ExactMatrix:
    """Classical (m+1) x (m+1) matrix with entry (i, j) = i! S(j, i)."""
    return ExactMatrix([[math.factorial(i) * stirling_number(j, i) for j in range(m + 1)]
                        for i in range(m + 1)])


def verify_decomposition(R: PointSet, ell: int) -> bool:
    """Whether L_R times the factorial Stirling matrix equals the Vandermonde matrix."""
    if len(R) == 0:
        return True
    return build_L(R) @ build_stirling_matrix(R, ell) == build_vandermonde_matrix(R, ell)
