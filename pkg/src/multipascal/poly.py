"""Sparse multivariate polynomials with exact rational coefficients.

Variables are named x0, x1, ..., x_{nvars-1}.  Matrix-related exponents use
slots 1..n and slot 0 is reserved for x0, so a polynomial "in x1, x2"
coming out of the Stirling code has ``nvars == 3``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from .errors import DimensionMismatch
from .mindex import grevlex_key, multi_binom


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def format_coeff(c) -> str:
    c = _normalize(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients.

    Coefficients stay Python ints unless a division forces a Fraction.
    Plain ints and Fractions are accepted wherever a Polynomial is, and are
    read as constants.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping = None, nvars: int = 1):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionMismatch(f"exponent {exps} in a ring with {nvars} variables")
            c = _normalize(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise DimensionMismatch(f"x{i} outside a ring with {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls({tuple(exps): coeff}, len(exps))

    # coercion

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return Polynomial(terms, self.nvars)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial({}, self.nvars)
        return Polynomial({e: v * c for e, v in self.terms.items()}, self.nvars)

    def __truediv__(self, c):
        """Division by a nonzero rational constant only."""
        if isinstance(c, Polynomial):
            if not c.is_constant() or not c:
                raise ZeroDivisionError("polynomials divide only by nonzero constants")
            c = c.constant_term
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.constant(1, self.nvars)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    # inspection

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def coeff(self, exps) -> Rational:
        return self.terms.get(tuple(exps), 0)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in canonical (grevlex-descending) order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e]
            neg = c < 0
            mag = -c if neg else c
            if not factors:
                body = format_coeff(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_coeff(mag)] + factors)
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"

    # evaluation and calculus

    def __call__(self, *point):
        """``p(1, 2)`` or ``p([1, 2])``."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return poly_eval(self, point)

    def hasse_derivative(self, k) -> "Polynomial":
        return hasse_derivative(self, k)


def poly_eval(p: Polynomial, point: Sequence):
    """Exact value of ``p`` at ``point`` (ints or Fractions)."""
    if len(point) != p.nvars:
        raise DimensionMismatch(f"point of length {len(point)} for {p.nvars} variables")
    total = 0
    for exps, c in p.terms.items():
        term = c
        for x, e in zip(point, exps):
            if e:
                term *= x ** e
        total += term
    return _normalize(total)


def hasse_derivative(p: Polynomial, k) -> Polynomial:
    """Divided derivative (1/k!) d^{|k|}/dx^k applied to ``p``.

    ``k`` has one entry per variable of ``p``, or one per x1..xn when it is
    one short, in which case x0 is left alone.  On a monomial x^a the
    result is C(a, k) x^{a-k}, so coefficients stay integral.
    """
    k = tuple(k)
    if len(k) == p.nvars - 1:
        k = (0,) + k
    if len(k) != p.nvars:
        raise DimensionMismatch(f"order {k} for {p.nvars} variables")
    terms = {}
    for exps, c in p.terms.items():
        b = multi_binom(exps, k)
        if b:
            e = tuple(x - y for x, y in zip(exps, k))
            terms[e] = terms.get(e, 0) + b * c
    return Polynomial(terms, p.nvars)


def monomial_power(base: Sequence[Polynomial], k) -> Polynomial:
    """Product of base_j ** k_j."""
    if len(base) != len(k):
        raise DimensionMismatch(f"{len(base)} bases for exponent {tuple(k)}")
    if not base:
        raise ValueError("empty base")
    nvars = base[0].nvars
    out = Polynomial.constant(1, nvars)
    for b, e in zip(base, k):
        if e:
            out = out * b ** e
    return out


def poly_add(a: Polynomial, b) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b) -> Polynomial:
    return a * b


def poly_scale(a: Polynomial, c) -> Polynomial:
    return a.scale(c)
