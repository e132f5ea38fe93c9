"""Multi-indices k = (k1, ..., kn) in Z^n_{>=0}.

Graded reverse lexicographic order (grevlex) is the total order used to
label rows and columns of every matrix in the package.  On equal total
degree, ``a < b`` iff the right-most nonzero entry of ``a - b`` is
positive, which enumerates Z^2 as (0,0), (0,1), (1,0), (0,2), (1,1), ...
"""
from __future__ import annotations

import math
from itertools import product
from typing import Iterable, Iterator

from .errors import DimensionMismatch


class MultiIndex(tuple):
    """Immutable vector of non-negative integers.

    ``+`` and ``-`` act componentwise (unlike plain tuples); ``-`` raises if
    the result would have a negative component.
    """

    __slots__ = ()

    def __new__(cls, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if not exps:
            raise ValueError("a multi-index needs dimension n >= 1")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def parse(cls, text: str) -> "MultiIndex":
        """Read the comma-separated form ``"1,0,2"``."""
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad multi-index {text!r}: {exc}") from None

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, j: int) -> "MultiIndex":
        """The standard basis vector e_j, 0-based ``j``."""
        e = [0] * n
        e[j] = 1
        return cls(e)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def exps(self) -> tuple:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def factorial(self) -> int:
        out = 1
        for e in self:
            out *= math.factorial(e)
        return out

    def __add__(self, other):
        _check_dims(self, other)
        return MultiIndex(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_dims(self, other)
        return MultiIndex(a - b for a, b in zip(self, other))

    def __mul__(self, scalar):
        return MultiIndex(scalar * a for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"MultiIndex({tuple(self)})"

    def __str__(self):
        return ",".join(str(e) for e in self)


def _check_dims(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension {len(a)} vs {len(b)}")


def grevlex_key(k) -> tuple:
    """Sort key realising grevlex; usable on plain tuples too."""
    return (sum(k), tuple(-e for e in reversed(k)))


def grevlex_cmp(a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    _check_dims(a, b)
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


def partial_leq(a, b) -> bool:
    """Componentwise order: a_j <= b_j for every j."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def multi_binom(k, i) -> int:
    """Product of the univariate binomials C(k_j, i_j); zero unless i <= k."""
    _check_dims(k, i)
    out = 1
    for kj, ij in zip(k, i):
        if ij > kj:
            return 0
        out *= math.comb(kj, ij)
    return out


def multinomial(total: int, parts) -> int:
    """total! / (p1! ... pn! (total - sum p)!); zero if the parts overflow."""
    rest = total - sum(parts)
    if rest < 0:
        return 0
    out = math.factorial(total) // math.factorial(rest)
    for p in parts:
        out //= math.factorial(p)
    return out


def box(k) -> Iterator[MultiIndex]:
    """All i with 0 <= i <= k componentwise (lexicographic, not grevlex)."""
    for exps in product(*(range(e + 1) for e in k)):
        yield MultiIndex(exps)


def interval(lo, hi) -> Iterator[MultiIndex]:
    """All i with lo <= i <= hi; empty when lo is not below hi."""
    _check_dims(lo, hi)
    if not partial_leq(lo, hi):
        return
    for exps in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        yield MultiIndex(exps)


def compositions(n: int, degree: int) -> Iterator[tuple]:
    """All exponent tuples of length n with total exactly ``degree``."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in compositions(n - 1, degree - first):
            yield (first,) + rest


def up_to_degree(n: int, degree: int) -> list:
    """Grevlex-sorted multi-indices of dimension n with |k| <= degree."""
    pts = [MultiIndex(c) for d in range(degree + 1) for c in compositions(n, d)]
    pts.sort(key=grevlex_key)
    return pts
