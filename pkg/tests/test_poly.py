from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from multipascal.errors import DimensionMismatch
from multipascal.mindex import MultiIndex, box, multi_binom, up_to_degree
from multipascal.parser import parse_polynomial
from multipascal.poly import (Polynomial, hasse_derivative, monomial_power, poly_add,
                              poly_eval, poly_mul, poly_scale)

x0, x1, x2 = (Polynomial.var(i, 3) for i in range(3))
one = Polynomial.constant(1, 3)


def polys(nvars, max_degree=5, max_terms=5):
    exps = st.sampled_from(up_to_degree(nvars, max_degree)).map(tuple)
    coeffs = st.integers(-9, 9) | st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.lists(st.tuples(exps, coeffs), max_size=max_terms).map(
        lambda ts: Polynomial(dict(ts), nvars))


def derivative(p, var):
    # plain partial derivative, used as the oracle for divided derivatives
    terms = {}
    for e, c in p.terms.items():
        if e[var]:
            f = list(e)
            f[var] -= 1
            terms[tuple(f)] = terms.get(tuple(f), 0) + c * e[var]
    return Polynomial(terms, p.nvars)


def divided_derivative_oracle(p, k):
    out = p
    for var, times in enumerate(k):
        for _ in range(times):
            out = derivative(out, var)
    return out.scale(Fraction(1, MultiIndex(k).factorial()))


def test_ring_examples():
    assert (one + x1) * (one + x1) == one + 2 * x1 + x1 ** 2
    assert x1 + Polynomial.constant(0, 3) == x1
    assert (x0 + x1) * (x0 - x1) == x0 ** 2 - x1 ** 2
    assert poly_add(x0, x1) == x0 + x1
    assert poly_mul(x0, x1) == x0 * x1
    assert poly_scale(x0, 3) == 3 * x0


def test_zero_coefficients_dropped():
    p = Polynomial({(1, 0): 0, (0, 1): 2}, 2)
    assert p.terms == {(0, 1): 2}
    assert not (x0 - x0)
    assert x0 - x0 == 0


def test_mismatched_nvars():
    with pytest.raises(DimensionMismatch):
        x0 + Polynomial.var(0, 2)


def test_canonical_text():
    assert str(2 * x0 * x2 + x2 ** 2) == "2*x0*x2 + x2^2"
    assert str(-x0) == "-x0"
    assert str(Fraction(3, 2) * x1) == "3/2*x1"
    assert str(x0 - 1) == "x0 - 1"
    assert str(Polynomial.constant(0, 2)) == "0"
    assert str(3 * x0 ** 2 * x2 + 3 * x0 * x2 ** 2 + x2 ** 3) == "3*x0^2*x2 + 3*x0*x2^2 + x2^3"


def test_accessors():
    p = 3 * x0 ** 2 * x1 + 5
    assert p.coeff((2, 1, 0)) == 3 and p.coeff((1, 1, 1)) == 0
    assert p.constant_term == 5
    assert p.degree == 3
    assert Polynomial.constant(7, 2).is_constant()


@given(polys(3), polys(3), polys(3))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(polys(3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_eval_is_a_ring_map(a, point):
    b = a * a + 1
    assert poly_eval(a * b, point) == poly_eval(a, point) * poly_eval(b, point)
    assert poly_eval(a + b, point) == poly_eval(a, point) + poly_eval(b, point)


def test_eval_examples():
    p2 = Polynomial.var(1, 2)
    assert poly_eval((1 + p2) ** 2, [0, 1]) == 4
    assert poly_eval(Polynomial.var(0, 2) + 2 * p2, [0, 1]) == 2
    assert (2 * Polynomial.var(0, 2) * p2 + p2 ** 2)([0, 1]) == 1
    with pytest.raises(DimensionMismatch):
        poly_eval(x0, [1])


def test_monomial_power_examples():
    assert monomial_power([1 + x1, 1 + x2], (2, 0)) == 1 + 2 * x1 + x1 ** 2
    assert monomial_power([x1 + 7, x2 - 3], (0, 0)) == 1
    assert monomial_power([x1, x2], (1, 1)) == x1 * x2
    with pytest.raises(DimensionMismatch):
        monomial_power([x1], (1, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_expansion_of_one_plus_x(n):
    xs = [Polynomial.var(j, n) for j in range(n)]
    for k in up_to_degree(n, 5):
        lhs = monomial_power([1 + v for v in xs], k)
        rhs = sum((Polynomial.monomial(kp, multi_binom(k, kp)) for kp in box(k)),
                  Polynomial.constant(0, n))
        assert lhs == rhs


def test_hasse_examples():
    assert hasse_derivative(x1 ** 2 * x2, (1, 0)) == 2 * x1 * x2
    assert hasse_derivative(x1 ** 2 * x2, (0, 1, 0)) == 2 * x1 * x2
    p = 3 * x0 * x1 + x2 ** 4
    assert hasse_derivative(p, (0, 0, 0)) == p
    assert hasse_derivative(x1, (2, 0)) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hasse_on_monomials(n):
    for kp in up_to_degree(n, 5):
        for k in up_to_degree(n, 5):
            got = hasse_derivative(Polynomial.monomial(kp), k)
            if all(a <= b for a, b in zip(k, kp)):
                expect = Polynomial.monomial(kp - k, multi_binom(kp, k))
            else:
                expect = Polynomial.constant(0, n)
            assert got == expect


@given(polys(3), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_hasse_matches_repeated_differentiation(p, k):
    assert hasse_derivative(p, k) == divided_derivative_oracle(p, k)


@given(polys(3))
def test_text_round_trip(p):
    assert parse_polynomial(str(p), 3) == p


def test_factorial_scaling_stays_exact():
    p = (x1 + x2) ** 4
    assert hasse_derivative(p, (0, 2, 0)) * 2 == derivative(derivative(p, 1), 1)
    assert factorial(4) * hasse_derivative(p, (0, 4, 0)) == 24
