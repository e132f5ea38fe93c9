import pytest

from multipascal.errors import ExpressionSyntaxError, NonUnitDenominator
from multipascal.parser import parse, parse_polynomial, parse_rational_expr, tokenize
from multipascal.poly import Polynomial
from multipascal.series import TruncatedSeries


def Z(n, cap):
    return TruncatedSeries.variables(n, cap)


def test_examples():
    z1, z2 = Z(2, 2)
    assert parse_rational_expr("1/((1-z1)*(1-z2))", 2, 2) == \
        1 + z1 + z2 + z1 ** 2 + z1 * z2 + z2 ** 2
    (z,) = Z(1, 2)
    assert parse_rational_expr("1/(1-2*z1)", 1, 2) == 1 + 2 * z + 4 * z ** 2
    with pytest.raises(NonUnitDenominator):
        parse_rational_expr("1/z1", 1, 3)


def test_precedence():
    (z,) = Z(1, 6)
    assert parse_rational_expr("1+2*z1^2", 1, 6) == 1 + 2 * z ** 2
    assert parse_rational_expr("-z1^2", 1, 6) == -(z ** 2)
    assert parse_rational_expr("(-z1)^2", 1, 6) == z ** 2
    assert parse_rational_expr("z1^2^2", 1, 6) == z ** 4
    assert parse_rational_expr("8/2/2", 1, 6) == 2
    assert parse_rational_expr("1-z1-z1", 1, 6) == 1 - 2 * z
    assert parse_rational_expr("--z1", 1, 6) == z
    assert parse_rational_expr("2*-z1", 1, 6) == -2 * z
    assert parse_rational_expr(" ( z1 ) ^ 0 ", 1, 6) == 1


def test_division_by_constant_gives_fractions():
    z1, z2 = Z(2, 2)
    assert parse_rational_expr("z1/3 + z2", 2, 2) == z1 / 3 + z2


@pytest.mark.parametrize("text,pos", [
    ("1+", 2), ("(1+z1", 5), ("z1^z2", 3), ("1 $ 2", 2), ("z3", 0), ("", 0), ("1)", 1),
    ("y1", 0), ("z1^-1", 3),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_rational_expr(text, 2, 3)
    assert exc.value.pos == pos


def test_tokens_and_ast():
    kinds = [t[0] for t in tokenize("2*z1 - (z2)")]
    assert kinds == ["num", "op", "var", "op", "op", "var", "op", "end"]
    assert parse("z1+1")[0] == "add"


def test_polynomials():
    x0, x1 = Polynomial.var(0, 2), Polynomial.var(1, 2)
    assert parse_polynomial("2*x0*x1 + x1^2", 2) == 2 * x0 * x1 + x1 ** 2
    assert parse_polynomial("(x0+x1)^3/3", 2) == (x0 + x1) ** 3 / 3
    assert parse_polynomial("-x0 - 1", 2) == -x0 - 1
    with pytest.raises(ExpressionSyntaxError):
        parse_polynomial("1/x0", 2)
    with pytest.raises(ExpressionSyntaxError):
        parse_polynomial("x0/0", 2)
    with pytest.raises(ExpressionSyntaxError):
        parse_polynomial("x2", 2)
