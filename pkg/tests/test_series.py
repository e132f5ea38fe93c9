import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multipascal.errors import DimensionMismatch, NonUnit, NonzeroConstantTerm, SingularJacobian
from multipascal.mindex import up_to_degree
from multipascal.series import (TruncatedSeries, is_set_of_variables, jacobian_at_zero,
                                series_from_json, series_to_json, ts_add, ts_comp_inverse,
                                ts_compose, ts_mul, ts_recip)

CAP = 4


def series(nvars, cap=CAP, unit=False, zero_constant=False, max_terms=6):
    exps = st.sampled_from(up_to_degree(nvars, cap)).map(tuple)
    coeffs = st.integers(-4, 4) | st.fractions(min_value=-2, max_value=2, max_denominator=3)

    def build(terms, c0):
        d = dict(terms)
        d.pop((0,) * nvars, None)
        if unit:
            d[(0,) * nvars] = c0
        elif not zero_constant:
            d[(0,) * nvars] = c0 - 1
        return TruncatedSeries(d, nvars, cap)

    return st.builds(build, st.lists(st.tuples(exps, coeffs), max_size=max_terms),
                     st.sampled_from([1, -1, 2, Fraction(1, 2), 3]))


def Z(n, cap=CAP):
    return TruncatedSeries.variables(n, cap)


def geometric(z, ratio, cap):
    # sum_{m <= cap} (ratio z)^m, built by repeated multiplication
    out, term = 0 * z + 1, 0 * z + 1
    for _ in range(cap):
        term = term * z * ratio
        out = out + term
    return out


def test_mul_examples():
    z1, z2 = Z(2, 2)
    assert ts_mul(1 + z1, 1 + z2) == 1 + z1 + z2 + z1 * z2
    assert ts_add(z1, TruncatedSeries.zero(2, 2)) == z1
    assert (1 - z1) * (1 + z1 + z1 ** 2) == TruncatedSeries.constant(1, 2, 2)


def test_truncation():
    z1, z2 = Z(2, 2)
    assert z1 * z2 * z1 == 0
    assert (z1 + z2) ** 3 == 0
    assert (1 + z1).truncate(0) == TruncatedSeries.constant(1, 2, 0)
    s = (1 + z1 + z2) ** 2
    assert s.homogeneous(1) == 2 * z1 + 2 * z2
    assert s.order == 0 and (z1 * z2).order == 2


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        Z(2, 2)[0] + Z(2, 3)[0]
    with pytest.raises(DimensionMismatch):
        Z(2)[0] * Z(3)[0]


def test_recip_examples():
    (z1,) = Z(1, 3)
    assert ts_recip(1 - z1) == 1 + z1 + z1 ** 2 + z1 ** 3
    assert ts_recip(TruncatedSeries.constant(1, 1, 3)) == 1
    z1, z2 = Z(2, 2)
    assert ts_recip((1 - z1) * (1 - z2)) == 1 + z1 + z2 + z1 ** 2 + z1 * z2 + z2 ** 2
    with pytest.raises(NonUnit):
        ts_recip(z1)
    assert ts_recip(TruncatedSeries.constant(4, 2, 2)) == Fraction(1, 4)


@given(series(2, unit=True))
def test_recip_inverts(a):
    assert a * ts_recip(a) == 1
    assert (1 / a) * a == 1
    assert a ** -2 * a ** 2 == 1


@given(series(2), series(2), series(2))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


def test_compose_examples():
    (z,) = Z(1, 5)
    x = z * ts_recip(1 - z)
    assert ts_compose(z, [x]) == z + z ** 2 + z ** 3 + z ** 4 + z ** 5
    z1, z2 = Z(2, 3)
    g = 1 + 3 * z1 * z2 - z2 ** 2
    assert ts_compose(g, [z1, z2]) == g
    (z,) = Z(1, 3)
    g = ts_recip(1 - z)
    xbar = z * ts_recip(1 + z)
    assert ts_compose(g, [xbar]) == 1 + z


def test_compose_errors():
    z1, z2 = Z(2, 3)
    with pytest.raises(NonzeroConstantTerm):
        ts_compose(z1, [1 + z1, z2])
    with pytest.raises(DimensionMismatch):
        ts_compose(z1, [z1])


@given(series(2), series(2, zero_constant=True), series(2, zero_constant=True),
       series(2, zero_constant=True), series(2, zero_constant=True))
def test_compose_is_an_algebra_map(g, h, x1, x2, y1):
    x = [x1, x2]
    assert ts_compose(g * h, x) == ts_compose(g, x) * ts_compose(h, x)
    assert ts_compose(g + h, x) == ts_compose(g, x) + ts_compose(h, x)
    # associativity of substitution: g(x(y)) == (g(x))(y)
    y = [y1, x1 * 2]
    assert ts_compose(g, [ts_compose(xi, y) for xi in x]) == ts_compose(ts_compose(g, x), y)


def test_compose_truncation_consistency():
    z1, z2 = Z(2, 5)
    g = ts_recip(1 - z1 - 2 * z2)
    x = [z1 * ts_recip(1 - z2), z2 + z1 ** 2]
    full = ts_compose(g, x)
    for d in range(5):
        small = ts_compose(g.truncate(d), [xi.truncate(d) for xi in x])
        assert full.truncate(d) == small


def test_comp_inverse_examples():
    for n in (1, 2, 3):
        zs = Z(n, 5)
        x = [zi * ts_recip(1 - zi) for zi in zs]
        assert ts_comp_inverse(x) == [zi * ts_recip(1 + zi) for zi in zs]
        assert ts_comp_inverse(zs) == zs
    z1, z2 = Z(2, 3)
    with pytest.raises(SingularJacobian):
        ts_comp_inverse([z1 + z2, z1 + z2])
    assert not is_set_of_variables([z1 + z2, z1 + z2])
    assert jacobian_at_zero([z1 + 2 * z2, 3 * z1]) == [[1, 3], [2, 0]]


@st.composite
def variable_sets(draw, n=2):
    # invertible linear part plus arbitrary terms of degree >= 2
    a, b, c, d = draw(st.tuples(*[st.integers(-3, 3)] * 4)
                      .filter(lambda m: m[0] * m[3] != m[1] * m[2]))
    z1, z2 = Z(n)
    xs = [a * z1 + b * z2, c * z1 + d * z2]
    for i in range(n):
        extra = draw(series(n, zero_constant=True))
        xs[i] = xs[i] + extra - TruncatedSeries(
            {e: v for e, v in extra.coeffs.items() if sum(e) == 1}, n, CAP)
    return xs


@given(variable_sets())
def test_comp_inverse_both_sides(x):
    xbar = ts_comp_inverse(x)
    zs = Z(2)
    assert [ts_compose(xi, xbar) for xi in x] == zs
    assert [ts_compose(yi, x) for yi in xbar] == zs


def test_json_round_trip():
    z1, z2 = Z(2, 3)
    s = Fraction(1, 3) * z1 - 2 * z2 ** 2 + 5
    data = series_to_json(s)
    assert data["n"] == 2 and data["cap"] == 3
    assert json.loads(json.dumps(data)) == data
    assert series_from_json(data) == s
    assert {"exp": [0, 0], "num": "5", "den": "1"} in data["coeffs"]
