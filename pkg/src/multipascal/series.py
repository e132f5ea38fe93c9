"""Multivariate formal power series truncated at a total-degree cap.

A :class:`TruncatedSeries` in variables z1..zn keeps every coefficient of
total degree <= cap and nothing else.  Arithmetic is exact over the
rationals, and products and compositions are exact up to the cap because
total degree never decreases under multiplication.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from .errors import DimensionMismatch, NonUnit, NonzeroConstantTerm, SingularJacobian
from .mindex import MultiIndex, grevlex_key, up_to_degree


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class TruncatedSeries:
    __slots__ = ("nvars", "cap", "coeffs")

    def __init__(self, coeffs: Mapping, nvars: int, cap: int):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        if cap < 0:
            raise ValueError("cap must be >= 0")
        self.nvars = nvars
        self.cap = cap
        clean = {}
        for e, c in coeffs.items():
            e = tuple(e)
            if len(e) != nvars:
                raise DimensionMismatch(f"exponent {e} for {nvars} variables")
            if sum(e) <= cap and c:
                clean[e] = clean.get(e, 0) + _norm(Fraction(c) if not isinstance(c, int) else c)
        self.coeffs = {e: _norm(c) for e, c in clean.items() if c}

    # constructors

    @classmethod
    def zero(cls, nvars, cap):
        return cls({}, nvars, cap)

    @classmethod
    def constant(cls, c, nvars, cap):
        return cls({(0,) * nvars: c}, nvars, cap)

    @classmethod
    def var(cls, i: int, nvars: int, cap: int) -> "TruncatedSeries":
        """The variable z_i, 1-based."""
        if not 1 <= i <= nvars:
            raise DimensionMismatch(f"z{i} outside {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls({tuple(e): 1}, nvars, cap)

    @classmethod
    def monomial(cls, exps, nvars, cap, coeff=1):
        return cls({tuple(exps): coeff}, nvars, cap)

    @classmethod
    def variables(cls, nvars, cap) -> list:
        return [cls.var(i, nvars, cap) for i in range(1, nvars + 1)]

    # helpers

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if (other.nvars, other.cap) != (self.nvars, self.cap):
                raise DimensionMismatch(
                    f"series shapes (n={self.nvars}, cap={self.cap}) and "
                    f"(n={other.nvars}, cap={other.cap})")
            return other
        if isinstance(other, (int, Rational)):
            return TruncatedSeries.constant(other, self.nvars, self.cap)
        return NotImplemented

    def coeff(self, exps):
        return self.coeffs.get(tuple(exps), 0)

    def __getitem__(self, exps):
        return self.coeff(exps)

    @property
    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, 0)

    @property
    def order(self) -> int:
        """Lowest total degree present; cap + 1 for the zero series."""
        return min((sum(e) for e in self.coeffs), default=self.cap + 1)

    def linear_part(self) -> list:
        """Coefficients of z1..zn."""
        return [self.coeff(MultiIndex.unit(self.nvars, j)) for j in range(self.nvars)]

    def homogeneous(self, d: int) -> "TruncatedSeries":
        return TruncatedSeries({e: c for e, c in self.coeffs.items() if sum(e) == d},
                               self.nvars, self.cap)

    def truncate(self, cap: int) -> "TruncatedSeries":
        """The same series at a lower cap."""
        if cap > self.cap:
            raise ValueError("cannot raise the cap of a truncated series")
        return TruncatedSeries(self.coeffs, self.nvars, cap)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(out, self.nvars, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries({e: -c for e, c in self.coeffs.items()}, self.nvars, self.cap)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return TruncatedSeries({e: c * other for e, c in self.coeffs.items()},
                                   self.nvars, self.cap)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cap = self.cap
        out = {}
        b_items = sorted(other.coeffs.items(), key=lambda t: sum(t[0]))
        for ea, ca in self.coeffs.items():
            room = cap - sum(ea)
            for eb, cb in b_items:
                if sum(eb) > room:
                    break
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return TruncatedSeries(out, self.nvars, cap)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            return ts_recip(self) ** (-m)
        out = TruncatedSeries.constant(1, self.nvars, self.cap)
        base = self
        while m:
            if m & 1:
                out = out * base
            m >>= 1
            if m:
                base = base * base
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * ts_recip(other)

    def __rtruediv__(self, other):
        return ts_recip(self) * other

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = TruncatedSeries.constant(other, self.nvars, self.cap)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.cap, self.coeffs) == (other.nvars, other.cap, other.coeffs)

    __hash__ = None

    def __call__(self, *x):
        return ts_compose(self, list(x))

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r}, nvars={self.nvars}, cap={self.cap})"

    def __str__(self):
        if not self.coeffs:
            return f"O(z^{self.cap + 1})"
        parts = []
        for e, c in sorted(self.coeffs.items(), key=lambda t: grevlex_key(t[0])):
            mono = "*".join(f"z{i + 1}" if a == 1 else f"z{i + 1}^{a}" for i, a in enumerate(e) if a)
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if parts:
                parts.append((" - " if neg else " + ") + body)
            else:
                parts.append(("-" if neg else "") + body)
        return "".join(parts) + f" + O(z^{self.cap + 1})"


def ts_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def ts_recip(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; raises NonUnit when a(0) = 0.

    Solved monomial by monomial in increasing degree from a * b = 1.
    """
    a0 = a.constant_term
    if not a0:
        raise NonUnit("series with zero constant term has no reciprocal")
    inv0 = Fraction(1) / Fraction(a0)
    n, cap = a.nvars, a.cap
    tail = [(e, c) for e, c in a.coeffs.items() if any(e)]
    b = {(0,) * n: inv0}
    for k in up_to_degree(n, cap)[1:]:
        acc = 0
        for e, c in tail:
            rest = tuple(x - y for x, y in zip(k, e))
            if min(rest) >= 0:
                acc += c * b.get(rest, 0)
        if acc:
            b[tuple(k)] = -acc * inv0
    return TruncatedSeries(b, n, cap)


class _PowerCache:
    """Lazily computed powers X_j^m of a fixed substitution."""

    def __init__(self, x: Sequence[TruncatedSeries]):
        self.x = list(x)
        self.powers = [[TruncatedSeries.constant(1, xi.nvars, xi.cap)] for xi in self.x]
        self.products = {}

    def power(self, j: int, m: int) -> TruncatedSeries:
        p = self.powers[j]
        while len(p) <= m:
            p.append(p[-1] * self.x[j])
        return p[m]

    def monomial(self, exps) -> TruncatedSeries:
        exps = tuple(exps)
        hit = self.products.get(exps)
        if hit is None:
            nz = [(j, e) for j, e in enumerate(exps) if e]
            if not nz:
                hit = self.power(0, 0)
            else:
                hit = self.power(*nz[0])
                for j, e in nz[1:]:
                    hit = hit * self.power(j, e)
            self.products[exps] = hit
        return hit


def ts_compose(g: TruncatedSeries, x: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """g(X1, ..., Xn); every X_i must lie in the maximal ideal.

    The result lives in the shape (nvars, cap) of the X_i.  Only terms of g
    up to the cap of the X_i can contribute.
    """
    x = list(x)
    if len(x) != g.nvars:
        raise DimensionMismatch(f"{len(x)} substitutions for {g.nvars} variables")
    if not x:
        raise ValueError("empty substitution")
    shape = (x[0].nvars, x[0].cap)
    for xi in x:
        if (xi.nvars, xi.cap) != shape:
            raise DimensionMismatch("substituted series differ in shape")
        if xi.constant_term:
            raise NonzeroConstantTerm("substituted series must have zero constant term")
    cache = _PowerCache(x)
    out = TruncatedSeries.zero(*shape)
    for e, c in g.coeffs.items():
        if sum(e) <= shape[1]:
            out = out + cache.monomial(e) * c
    return out


def jacobian_at_zero(x: Sequence[TruncatedSeries]) -> list:
    """J[i][j] = coefficient of z_i in X_j (i.e. dX_j/dz_i at the origin)."""
    n = len(x)
    return [[x[j].coeff(MultiIndex.unit(n, i)) for j in range(n)] for i in range(n)]


def _solve_inverse(m: list) -> list:
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularJacobian("linear part of the substitution is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def is_set_of_variables(x: Sequence[TruncatedSeries]) -> bool:
    if any(xi.constant_term for xi in x):
        return False
    try:
        _solve_inverse(jacobian_at_zero(x))
    except SingularJacobian:
        return False
    return True


def ts_comp_inverse(x: Sequence[TruncatedSeries]) -> list:
    """Compositional inverse Y of X, i.e. X(Y) = Z = Y(X) up to the cap.

    Starts from the inverse of the linear part and corrects one total
    degree at a time: adding a degree-d term delta to Y changes X(Y) in
    degree d by exactly J^T delta.
    """
    x = list(x)
    n = len(x)
    if n == 0 or any(xi.nvars != n for xi in x):
        raise DimensionMismatch("need n series in n variables")
    if any(xi.constant_term for xi in x):
        raise NonzeroConstantTerm("substitution must lie in the maximal ideal")
    cap = x[0].cap
    J = jacobian_at_zero(x)
    # delta = -(J^T)^{-1} r
    jt_inv = _solve_inverse([list(col) for col in zip(*J)])
    z = TruncatedSeries.variables(n, cap)
    y = [sum((z[i] * jt_inv[j][i] for i in range(n)), TruncatedSeries.zero(n, cap))
         for j in range(n)]
    for d in range(2, cap + 1):
        xy = [ts_compose(xi, y) for xi in x]
        resid = [(xy[j] - z[j]).homogeneous(d) for j in range(n)]
        if not any(r.coeffs for r in resid):
            continue
        y = [y[i] - sum((resid[j] * jt_inv[i][j] for j in range(n)), TruncatedSeries.zero(n, cap))
             for i in range(n)]
    return y


def series_to_json(s: TruncatedSeries) -> dict:
    coeffs = []
    for e, c in sorted(s.coeffs.items(), key=lambda t: grevlex_key(t[0])):
        c = Fraction(c)
        coeffs.append({"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)})
    return {"n": s.nvars, "cap": s.cap, "coeffs": coeffs}


def series_from_json(data: Mapping) -> TruncatedSeries:
    n, cap = int(data["n"]), int(data["cap"])
    coeffs = {}
    for item in data["coeffs"]:
        e = tuple(int(v) for v in item["exp"])
        coeffs[e] = Fraction(int(item["num"]), int(item.get("den", "1")))
    return TruncatedSeries(coeffs, n, cap)
