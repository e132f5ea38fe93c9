"""Recursive-descent parser for rational-function expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := base ('^' nat)*          # right associative
    base   := nat | var | '(' expr ')'
    var    := letter nat               # z1..zn for series, x0..xn for polynomials

``^`` binds tighter than unary minus, so ``-z1^2`` is ``-(z1^2)``.
Exponents are non-negative integer literals.  The parser builds a small
tuple AST; evaluators turn it into a :class:`TruncatedSeries` or a
:class:`Polynomial`.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExpressionSyntaxError, NonUnit, NonUnitDenominator
from .poly import Polynomial
from .series import TruncatedSeries, ts_recip

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])(\d+)|(.))")


def tokenize(text: str) -> list:
    """List of (kind, value, pos); kinds are num, var, op, end."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(4)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("var", (m.group(2), int(m.group(3))), start))
        elif m.group(4) in "+-*/^()":
            tokens.append(("op", m.group(4), start))
        else:
            raise ExpressionSyntaxError(f"unexpected character {m.group(4)!r}", start)
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        kind, value, _ = self.peek()
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def parse(self):
        if self.peek()[0] == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExpressionSyntaxError(f"unexpected {value!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                node = ("add" if value == "+" else "sub", node, self.term(), pos)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.next()
                node = ("mul" if value == "*" else "div", node, self.factor(), pos)
            else:
                return node

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.next()
            return ("neg", self.factor(), pos)
        return self.power()

    def power(self):
        base = self.base()
        exps = []
        while True:
            kind, value, pos = self.peek()
            if not (kind == "op" and value == "^"):
                break
            self.next()
            kind, value, epos = self.next()
            if kind != "num":
                raise ExpressionSyntaxError("exponent must be a non-negative integer", epos)
            exps.append(value)
        if not exps:
            return base
        e = exps[-1]
        for x in reversed(exps[:-1]):
            e = x ** e
        return ("pow", base, e, pos)

    def base(self):
        kind, value, pos = self.next()
        if kind == "num":
            return ("num", value, pos)
        if kind == "var":
            return ("var", value, pos)
        if kind == "op" and value == "(":
            node = self.expr()
            kind, value, cpos = self.next()
            if not (kind == "op" and value == ")"):
                raise ExpressionSyntaxError("expected ')'", cpos)
            return node
        if kind == "end":
            raise ExpressionSyntaxError("unexpected end of input", pos)
        raise ExpressionSyntaxError(f"unexpected {value!r}", pos)


def parse(text: str):
    """Parse ``text`` into a tuple AST."""
    return _Parser(text).parse()


class _Evaluator:
    def __init__(self, letter, lo, hi, make_const, make_var, divide):
        self.letter, self.lo, self.hi = letter, lo, hi
        self.make_const, self.make_var, self.divide = make_const, make_var, divide

    def __call__(self, node):
        tag = node[0]
        if tag == "num":
            return self.make_const(node[1])
        if tag == "var":
            (letter, idx), pos = node[1], node[2]
            if letter != self.letter or not self.lo <= idx <= self.hi:
                raise ExpressionSyntaxError(
                    f"unknown variable {letter}{idx} (expected {self.letter}{self.lo}..{self.letter}{self.hi})",
                    pos)
            return self.make_var(idx)
        if tag == "neg":
            return -self(node[1])
        if tag == "pow":
            return self(node[1]) ** node[2]
        a, b, pos = self(node[1]), self(node[2]), node[3]
        if tag == "add":
            return a + b
        if tag == "sub":
            return a - b
        if tag == "mul":
            return a * b
        return self.divide(a, b, pos)


def parse_rational_expr(text: str, nvars: int, cap: int) -> TruncatedSeries:
    """Expand an expression in z1..zn to a series truncated at total degree ``cap``."""

    def divide(a, b, pos):
        try:
            return a * ts_recip(b)
        except NonUnit:
            raise NonUnitDenominator(f"denominator at position {pos} has zero constant term") from None

    ev = _Evaluator("z", 1, nvars,
                    lambda c: TruncatedSeries.constant(c, nvars, cap),
                    lambda i: TruncatedSeries.var(i, nvars, cap),
                    divide)
    return ev(parse(text))


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Read a polynomial in x0..x{nvars-1}; division only by nonzero constants.

    Accepts the canonical text written by ``str(Polynomial)``.
    """

    def divide(a, b, pos):
        if not b.is_constant() or not b:
            raise ExpressionSyntaxError("division by a non-constant polynomial", pos)
        return a.scale(Fraction(1) / Fraction(b.constant_term))

    ev = _Evaluator("x", 0, nvars - 1,
                    lambda c: Polynomial.constant(c, nvars),
                    lambda i: Polynomial.var(i, nvars),
                    divide)
    return ev(parse(text))
