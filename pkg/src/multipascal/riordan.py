"""The multivariate Riordan group on truncated power series.

A Riordan basis is a pair (G, X) with G a unit series and X = (X1..Xn) a
set of variables.  Its matrix has, in column j, the coefficients of
G * X^j, with rows and columns labelled by multi-indices in grevlex order.
The group law (G, X) * (H, Y) = (G H(X), Y(X)) makes that representation
multiplicative.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (DimensionMismatch, NonUnit, SingularJacobian,
                     WindowExceedsCap)
from .mindex import multi_binom
from .parser import parse_rational_expr
from .pascal import ExactMatrix
from .pointset import PointSet, degree_window
from .series import (TruncatedSeries, _PowerCache, is_set_of_variables,
                     ts_comp_inverse, ts_compose, ts_recip)


@dataclass(frozen=True, eq=False)
class RiordanBasis:
    g: TruncatedSeries
    x: tuple

    def __post_init__(self):
        x = tuple(self.x)
        object.__setattr__(self, "x", x)
        n, cap = self.g.nvars, self.g.cap
        if len(x) != n or any((xi.nvars, xi.cap) != (n, cap) for xi in x):
            raise DimensionMismatch(f"need {n} series with n={n}, cap={cap}")
        if not self.g.constant_term:
            raise NonUnit("G must have a nonzero constant term")
        if not is_set_of_variables(x):
            raise SingularJacobian("X is not a set of variables")

    @property
    def n(self) -> int:
        return self.g.nvars

    @property
    def cap(self) -> int:
        return self.g.cap

    def __eq__(self, other):
        if not isinstance(other, RiordanBasis):
            return NotImplemented
        return self.g == other.g and self.x == other.x

    __hash__ = None

    def __mul__(self, other):
        return riordan_product(self, other)

    @classmethod
    def identity(cls, n: int, cap: int) -> "RiordanBasis":
        return cls(TruncatedSeries.constant(1, n, cap), tuple(TruncatedSeries.variables(n, cap)))

    @classmethod
    def parse(cls, g: str, x: Sequence[str], cap: int) -> "RiordanBasis":
        n = len(x)
        return cls(parse_rational_expr(g, n, cap), tuple(parse_rational_expr(e, n, cap) for e in x))


def pascal_basis(n: int, cap: int, p: int = 1) -> RiordanBasis:
    """(1 / prod(1 - p z_j), z_i / (1 - p z_i)), whose matrix is L**p."""
    z = TruncatedSeries.variables(n, cap)
    g = TruncatedSeries.constant(1, n, cap)
    x = []
    for zi in z:
        denom = ts_recip(1 - zi * p)
        g = g * denom
        x.append(zi * denom)
    return RiordanBasis(g, tuple(x))


def riordan_product(a: RiordanBasis, b: RiordanBasis) -> RiordanBasis:
    if (a.n, a.cap) != (b.n, b.cap):
        raise DimensionMismatch("Riordan bases of different shape")
    return RiordanBasis(a.g * ts_compose(b.g, a.x), tuple(ts_compose(y, a.x) for y in b.x))


def riordan_inverse(a: RiordanBasis) -> RiordanBasis:
    """(1 / G(Xbar), Xbar) with Xbar the compositional inverse of X."""
    xbar = ts_comp_inverse(a.x)
    return RiordanBasis(ts_recip(ts_compose(a.g, xbar)), tuple(xbar))


def riordan_matrix(basis: RiordanBasis, window: PointSet = None) -> ExactMatrix:
    """Window of the Riordan matrix: entry (i, j) = [Z^i] G X^j.

    ``window`` defaults to every multi-index of degree <= cap.
    """
    if window is None:
        window = degree_window(basis.n, basis.cap)
    if window.n != basis.n:
        raise DimensionMismatch(f"window of dimension {window.n} for n={basis.n}")
    if window.max_degree > basis.cap:
        raise WindowExceedsCap(f"window reaches degree {window.max_degree} > cap {basis.cap}")
    cache = _PowerCache(basis.x)
    columns = [basis.g * cache.monomial(j) for j in window.points]
    rows = [[col.coeff(i) for col in columns] for i in window.points]
    return ExactMatrix(rows, window.points, window.points)


def random_basis(rng: random.Random, n: int, cap: int, coeff_range: int = 3,
                 density: float = 0.5) -> RiordanBasis:
    """Random basis with small integer coefficients and invertible linear part."""
    pts = degree_window(n, cap).points

    def rand_series(start: int) -> dict:
        out = {}
        for k in pts:
            if k.degree >= start and rng.random() < density:
                out[tuple(k)] = rng.randint(-coeff_range, coeff_range)
        return out

    g = rand_series(1)
    g[(0,) * n] = rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
    g_series = TruncatedSeries(g, n, cap)
    while True:
        x = []
        for _ in range(n):
            x.append(TruncatedSeries(rand_series(1), n, cap))
        if is_set_of_variables(x):
            return RiordanBasis(g_series, tuple(x))


# --- truncated checks of the infinite-matrix identities --------------------

def _row_series(coeff, k, W: PointSet, cap: int) -> TruncatedSeries:
    """sum_{k' in W} coeff(k, k') z^{k'} as a series capped at ``cap``."""
    return TruncatedSeries({tuple(kp): coeff(k, kp) for kp in W.points}, W.n, cap)


def check_U_on_monomials(n: int, D: int) -> list:
    """Rows k of U applied to (z^{k'}) against z^k / (1 - z)^{k + 1}.

    Returns the multi-indices k whose rows disagree (empty on success).
    Rows and the comparison run over the full window |k'| <= D, which
    holds every monomial the capped series can see.
    """
    W = degree_window(n, D)
    z = TruncatedSeries.variables(n, D)
    bad = []
    for k in W.points:
        lhs = _row_series(lambda a, b: multi_binom(b, a), k, W, D)
        denom = TruncatedSeries.constant(1, n, D)
        for zj, kj in zip(z, k):
            denom = denom * (1 - zj) ** (kj + 1)
        rhs = TruncatedSeries.monomial(k, n, D) * ts_recip(denom)
        if lhs != rhs:
            bad.append(k)
    return bad


def check_U_on_divided_powers(n: int, D: int) -> list:
    """Rows of U applied to (z^{k'} / k'!) against (z^k / k!) e^{z1 + ... + zn}."""
    W = degree_window(n, D)
    s = sum(TruncatedSeries.variables(n, D), TruncatedSeries.zero(n, D))
    exp_s = TruncatedSeries.zero(n, D)
    term = TruncatedSeries.constant(1, n, D)
    for m in range(D + 1):
        exp_s = exp_s + term
        term = term * s / (m + 1)
    bad = []
    for k in W.points:
        lhs = _row_series(lambda a, b: Fraction(multi_binom(b, a), b.factorial()), k, W, D)
        rhs = TruncatedSeries.monomial(k, n, D, Fraction(1, k.factorial())) * exp_s
        if lhs != rhs:
            bad.append(k)
    return bad


def check_S_on_monomials(n: int, D: int) -> list:
    """Rows of S applied to (z^{k'}) against 1 / (1 - z)^{k + 1}."""
    W = degree_window(n, D)
    z = TruncatedSeries.variables(n, D)
    bad = []
    for k in W.points:
        lhs = _row_series(lambda a, b: multi_binom(a + b, a), k, W, D)
        denom = TruncatedSeries.constant(1, n, D)
        for zj, kj in zip(z, k):
            denom = denom * (1 - zj) ** (kj + 1)
        if lhs != ts_recip(denom):
            bad.append(k)
    return bad
