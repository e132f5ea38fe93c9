"""Verification suites: each checks one family of identities on concrete sets.

Every suite returns a :class:`Report`.  Counterexamples are JSON-ready
dicts so the CLI can print them unchanged.  Suites that take random
inputs draw them from ``random.Random(seed)`` and are deterministic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .pascal import (ExactMatrix, binomial_transform, build_A, build_D, build_L,
                     build_L_power, build_S, build_U, determinant, inverse,
                     matrix_exponential_nilpotent, matrix_power)
from .pointset import PointSet, degree_window, random_staircase
from .poly import Polynomial
from .riordan import (pascal_basis, random_basis, riordan_inverse, riordan_matrix,
                      riordan_product)
from .series import ts_comp_inverse
from .stirling import linear_form, stirling_poly, verify_decomposition

NONZERO_POWERS = (-3, -2, -1, 1, 2, 3)
SUITES = ("lu", "inverse", "powers", "exp", "transform", "decomp", "riordan")


@dataclass
class Report:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, **detail):
        self.checks += 1
        if not ok:
            self.failures.append(detail)

    def merge(self, other: "Report"):
        self.checks += other.checks
        self.failures.extend(other.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {"suite": self.suite, "checks": self.checks, "failures": len(self.failures)}
        if self.failures:
            out["counterexamples"] = self.failures
        return out


def _mat(m: ExactMatrix) -> list:
    return [[str(x) for x in r] for r in m.rows]


def _pts(R: PointSet) -> list:
    return R.to_lists()


def random_sets(seed: int, count: int, max_n: int = 3, max_points: int = 40) -> list:
    rng = random.Random(seed)
    return [random_staircase(rng, rng.randint(1, max_n), rng.randint(1, max_points))
            for _ in range(count)]


# --- individual suites ------------------------------------------------------

def suite_lu(R: PointSet) -> Report:
    """S = L U, det L = det U = det S = 1."""
    rep = Report("lu")
    L, U, S = build_L(R), build_U(R), build_S(R)
    LU = L @ U
    rep.check(LU == S, set=_pts(R), claim="S == L*U", S=_mat(S), LU=_mat(LU))
    for name, m in (("L", L), ("U", U), ("S", S)):
        d = determinant(m)
        rep.check(d == 1, set=_pts(R), claim=f"det({name}) == 1", det=str(d))
    return rep


def suite_inverse(R: PointSet) -> Report:
    """L^-1 = D L D, U^-1 = D U D, and the two candidate forms of S^-1.

    D = diag((-1)^|k|).  ``S^-1 == D S D`` fails on every set that holds a
    point besides the origin; it is still checked so the report shows it.
    The form that does hold, S^-1 = U^-1 L^-1 = D U L D, is checked too.
    """
    rep = Report("inverse")
    D = build_D(R)
    L, U, S = build_L(R), build_U(R), build_S(R)
    for name, m in (("L", L), ("U", U), ("S", S)):
        conj = D @ m @ D
        rep.check((m @ conj).is_identity() and inverse(m) == conj,
                  set=_pts(R), claim=f"{name}^-1 == D {name} D", conj=_mat(conj),
                  inverse=_mat(inverse(m)))
    dul = D @ U @ L @ D
    rep.check((S @ dul).is_identity(), set=_pts(R), claim="S^-1 == D U L D", conj=_mat(dul))
    return rep


def suite_powers(R: PointSet, ps: Sequence[int] = NONZERO_POWERS,
                 qs: Sequence[int] = NONZERO_POWERS) -> Report:
    """Closed-form powers: product law, divisibility, agreement with L**p."""
    rep = Report("powers")
    L = build_L(R)
    closed = {p: build_L_power(R, p) for p in set(ps) | set(qs) | {a + b for a in ps for b in qs}}
    for p in sorted(set(ps) | set(qs)):
        direct = matrix_power(L, p)
        rep.check(direct == closed[p], set=_pts(R), claim=f"closed form == L**{p}")
        off_ok = all(x % p == 0 for i, r in enumerate(closed[p].rows)
                     for j, x in enumerate(r) if i != j)
        diag_ok = all(closed[p].rows[i][i] == 1 for i in range(len(R)))
        rep.check(off_ok and diag_ok, set=_pts(R), claim=f"L^{p} == I mod {p}")
    for p in ps:
        for q in qs:
            rep.check(closed[p] @ closed[q] == closed[p + q],
                      set=_pts(R), claim=f"L^{p} L^{q} == L^{p + q}")
    return rep


def suite_exp(R: PointSet, ps: Iterable[int] = range(-2, 3)) -> Report:
    """exp(p A_R) = L_R^p and A_R^m = 0 for m > max |k|."""
    rep = Report("exp")
    A = build_A(R)
    for p in ps:
        e = matrix_exponential_nilpotent(A, p)
        rep.check(e == build_L_power(R, p), set=_pts(R), claim=f"exp({p} A) == L^{p}",
                  exp=_mat(e))
    top = R.max_degree
    rep.check(matrix_power(A, top + 1).is_zero(), set=_pts(R), claim=f"A^{top + 1} == 0")
    return rep


def _random_poly(rng: random.Random, nvars: int, terms: int = 3, degree: int = 3) -> Polynomial:
    out = {}
    for _ in range(terms):
        e = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = rng.randint(-5, 5)
    return Polynomial(out, nvars)


def suite_transform(R: PointSet, seed: int = 0, ell: Optional[int] = None) -> Report:
    """Forward/inverse round trips, and the transform of k! S_k^(l) being A_k^l."""
    rep = Report("transform")
    rng = random.Random(seed)
    ints = {k: rng.randint(-50, 50) for k in R}
    polys = {k: _random_poly(rng, R.n + 1) for k in R}
    for label, seq in (("integer", ints), ("polynomial", polys)):
        fwd = binomial_transform(R, seq)
        back = binomial_transform(R, fwd, inverse=True)
        rep.check(back == seq, set=_pts(R), claim=f"inverse(forward(a)) == a ({label})")
        back = binomial_transform(R, binomial_transform(R, seq, inverse=True))
        rep.check(back == seq, set=_pts(R), claim=f"forward(inverse(a)) == a ({label})")
    for l in ([ell] if ell is not None else range(1, 4)):
        stir = {k: stirling_poly(k, l) * k.factorial() for k in R}
        got = binomial_transform(R, stir)
        rep.check(all(got[k] == linear_form(k) ** l for k in R),
                  set=_pts(R), claim=f"transform of k! S_k^({l}) == A_k^{l}")
    return rep


def suite_decomp(R: PointSet, ell: int = 5) -> Report:
    rep = Report("decomp")
    rep.check(verify_decomposition(R, ell), set=_pts(R), claim=f"L_R S_(R,{ell}) == V_(R,{ell})")
    return rep


def suite_riordan_pascal(n: int, degree: int, p: int) -> Report:
    """Window of the Riordan matrix of the Pascal basis equals L^p."""
    rep = Report("riordan")
    W = degree_window(n, degree)
    m = riordan_matrix(pascal_basis(n, degree, p), W)
    rep.check(m == build_L_power(W, p), n=n, degree=degree, p=p,
              claim="R(1/prod(1-p z), z/(1-p z)) == L^p", matrix=_mat(m))
    return rep


def suite_riordan_group(seed: int, count: int, max_n: int = 2, max_degree: int = 5) -> Report:
    """Homomorphism and inverse checks of the matrix representation."""
    rep = Report("riordan")
    rng = random.Random(seed)
    for t in range(count):
        n, D = rng.randint(1, max_n), rng.randint(1, max_degree)
        a, b = random_basis(rng, n, D), random_basis(rng, n, D)
        W = degree_window(n, D)
        ma, mb = riordan_matrix(a, W), riordan_matrix(b, W)
        rep.check(riordan_matrix(riordan_product(a, b), W) == ma @ mb,
                  trial=t, n=n, degree=D, claim="M(a*b) == M(a) M(b)")
        ainv = riordan_inverse(a)
        rep.check(riordan_matrix(ainv, W) == inverse(ma),
                  trial=t, n=n, degree=D, claim="M(a^-1) == M(a)^-1")
        ident = riordan_product(a, ainv)
        rep.check(riordan_matrix(ident, W).is_identity(),
                  trial=t, n=n, degree=D, claim="a * a^-1 == identity")
    return rep


def suite_comp_inverse(n: int, degree: int) -> Report:
    """Compositional inverse of z_i/(1 - z_i) is z_i/(1 + z_i)."""
    rep = Report("riordan")
    x = pascal_basis(n, degree, 1).x
    expect = pascal_basis(n, degree, -1).x
    got = ts_comp_inverse(x)
    rep.check(tuple(got) == tuple(expect), n=n, degree=degree,
              claim="comp_inverse(z/(1-z)) == z/(1+z)")
    return rep


def run_suite(suite: str, sets: Sequence[PointSet] = (), *, n: Optional[int] = None,
              degree: Optional[int] = None, p: Optional[int] = None, q: Optional[int] = None,
              ell: Optional[int] = None, seed: int = 0, trials: int = 10) -> Report:
    """Dispatch used by the CLI.

    ``sets`` are explicit point sets; when empty, the ``n``/``degree``
    window is used, and failing that ``trials`` random staircases.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = Report(suite)
    if suite == "riordan":
        ps = [p] if p is not None else list(NONZERO_POWERS)
        ns = [n] if n is not None else [1, 2, 3]
        ds = [degree] if degree is not None else [3]
        for nn in ns:
            for dd in ds:
                for pp in ps:
                    if pp == 0:
                        continue
                    report.merge(suite_riordan_pascal(nn, dd, pp))
                report.merge(suite_comp_inverse(nn, dd))
        report.merge(suite_riordan_group(seed, trials, max_n=n or 2, max_degree=max(ds)))
        return report

    if not sets:
        if n is not None and degree is not None:
            sets = [degree_window(n, degree)]
        else:
            sets = random_sets(seed, trials, max_n=n or 3,
                               max_points=30 if suite == "decomp" else 40)
    for i, R in enumerate(sets):
        if suite == "lu":
            report.merge(suite_lu(R))
        elif suite == "inverse":
            report.merge(suite_inverse(R))
        elif suite == "powers":
            ps = [p] if p is not None else NONZERO_POWERS
            qs = [q] if q is not None else NONZERO_POWERS
            report.merge(suite_powers(R, ps, qs))
        elif suite == "exp":
            report.merge(suite_exp(R, [p] if p is not None else range(-2, 3)))
        elif suite == "transform":
            report.merge(suite_transform(R, seed + i, ell))
        elif suite == "decomp":
            report.merge(suite_decomp(R, ell if ell is not None else 5))
    return report
