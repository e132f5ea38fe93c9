"""Finite point sets R in Z^n_{>=0}, monomial ideals and their staircases."""
from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Optional

from .errors import DimensionMismatch, InfiniteSet, MonomialConditionViolated
from .mindex import MultiIndex, grevlex_key, partial_leq, up_to_degree


def _as_points(points, n=None):
    pts = [p if isinstance(p, MultiIndex) else MultiIndex(p) for p in points]
    dims = {p.n for p in pts}
    if n is not None:
        dims.add(n)
    if len(dims) > 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    return pts, (dims.pop() if dims else None)


def check_monomial_condition(points: Iterable) -> bool:
    """True iff the set is downward closed under the componentwise order.

    Only the immediate predecessors k - e_j of each point are looked up;
    closure under those implies closure under the whole order ideal.
    """
    pts, _ = _as_points(points)
    members = set(pts)
    for k in members:
        for j, e in enumerate(k):
            if e and k[:j] + (e - 1,) + k[j + 1:] not in members:
                return False
    return True


class PointSet:
    """Grevlex-sorted, duplicate-free finite subset of Z^n_{>=0}.

    Construction sorts and deduplicates silently.  ``n`` must be given for
    an empty set.
    """

    def __init__(self, points: Iterable = (), n: Optional[int] = None):
        pts, dim = _as_points(points, n)
        if dim is None:
            raise ValueError("dimension of an empty point set must be given")
        self.n = dim
        self.points = tuple(sorted(set(pts), key=grevlex_key))
        self._pos = {p: i for i, p in enumerate(self.points)}

    @cached_property
    def monomial_condition(self) -> bool:
        return check_monomial_condition(self.points)

    def require_monomial_condition(self):
        if not self.monomial_condition:
            raise MonomialConditionViolated(
                f"point set {self.to_lists()} is not downward closed")

    def index(self, k) -> int:
        return self._pos[k]

    def __contains__(self, k):
        return k in self._pos

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.n == other.n and self.points == other.points

    def __hash__(self):
        return hash((self.n, self.points))

    def __repr__(self):
        return f"PointSet({self.to_lists()})"

    @property
    def max_degree(self) -> int:
        return max((p.degree for p in self.points), default=0)

    def to_lists(self) -> list:
        return [list(p) for p in self.points]


class MonomialIdeal:
    """Monomial ideal given by exponent vectors of its generators.

    Generators are reduced to the minimal ones on construction.
    """

    def __init__(self, generators: Iterable, n: Optional[int] = None):
        gens, dim = _as_points(generators, n)
        if dim is None:
            raise ValueError("dimension of the zero ideal must be given")
        self.n = dim
        gens = sorted(set(gens), key=grevlex_key)
        self.generators = tuple(
            g for g in gens
            if not any(h != g and partial_leq(h, g) for h in gens))

    def contains(self, k) -> bool:
        return any(partial_leq(g, k) for g in self.generators)

    @property
    def is_zero_dimensional(self) -> bool:
        pure = set()
        for g in self.generators:
            support = [j for j, e in enumerate(g) if e]
            if len(support) == 1:
                pure.add(support[0])
        return len(pure) == self.n

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __repr__(self):
        return f"MonomialIdeal({[list(g) for g in self.generators]})"


def standard_monomials(ideal: MonomialIdeal, degree_bound: Optional[int] = None) -> PointSet:
    """Exponents of the monomials outside ``ideal``, optionally with |k| <= bound."""
    if degree_bound is None and not ideal.is_zero_dimensional:
        raise InfiniteSet(f"{ideal} is not zero-dimensional; pass a degree bound")
    n = ideal.n
    found = []
    frontier = [MultiIndex.zero(n)]
    seen = set(frontier)
    # The staircase is downward closed, so growing it one unit step at a
    # time from the origin reaches every standard monomial.
    while frontier:
        nxt = []
        for k in frontier:
            if ideal.contains(k):
                continue
            if degree_bound is not None and k.degree > degree_bound:
                continue
            found.append(k)
            for j in range(n):
                succ = k + MultiIndex.unit(n, j)
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
    return PointSet(found, n=n)


def minimal_generators(R: PointSet) -> MonomialIdeal:
    """Minimal generators of the monomial ideal whose staircase is ``R``."""
    R.require_monomial_condition()
    n = R.n
    if len(R) == 0:
        return MonomialIdeal([MultiIndex.zero(n)])
    gens = set()
    for k in R:
        for j in range(n):
            c = k + MultiIndex.unit(n, j)
            if c in R:
                continue
            if all(c - MultiIndex.unit(n, i) in R for i in range(n) if c[i]):
                gens.add(c)
    return MonomialIdeal(gens, n=n)


def degree_window(n: int, D: int) -> PointSet:
    """All k in Z^n_{>=0} with |k| <= D; has C(n + D, n) elements."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if D < 0:
        raise ValueError("D must be >= 0")
    return PointSet(up_to_degree(n, D), n=n)


def random_staircase(rng: random.Random, n: int, size: int,
                     max_exponent: int = 6) -> PointSet:
    """Random finite downward-closed set of exactly ``size`` points.

    Starts from the origin and repeatedly adds a random outer corner, i.e.
    a point outside the set whose immediate predecessors all lie inside.
    Exponents stay <= ``max_exponent`` unless no corner is left below it.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    pts = {MultiIndex.zero(n)}
    corners = {MultiIndex.unit(n, j) for j in range(n)}
    while len(pts) < size:
        small = sorted(c for c in corners if max(c) <= max_exponent)
        c = rng.choice(small or sorted(corners))
        pts.add(c)
        corners.discard(c)
        for j in range(n):
            d = c + MultiIndex.unit(n, j)
            if all(d - MultiIndex.unit(n, i) in pts for i in range(n) if d[i]):
                corners.add(d)
    return PointSet(pts, n=n)
