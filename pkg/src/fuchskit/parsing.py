"""Parser for rational-function expressions in one variable.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := base ('^' factor)?
    base   := integer | variable | '(' expr ')'

'^' binds tighter than unary minus, so -x^2 is -(x^2).  Exponents must
evaluate to integers; negative exponents are allowed on nonzero bases.
Errors carry the 0-based position of the offending character.
"""

from __future__ import annotations

from .errors import DivisionByZeroFunction, ExpressionSyntaxError
from .ratfunc import RationalFunction


class _Scanner:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def error(self, message):
        raise ExpressionSyntaxError(message, self.pos)


def parse_rational_function(text: str, var: str = "x") -> RationalFunction:
    """Parse an expression like ``(3*(3*x^2-1))/(x*(x-1)*(x+1))``."""
    sc = _Scanner(text, var)
    value = _expr(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        sc.error(f"unexpected character {text[sc.pos]!r}")
    return value


def _expr(sc: _Scanner) -> RationalFunction:
    value = _term(sc)
    while sc.peek() in ("+", "-"):
        op = sc.take()
        rhs = _term(sc)
        value = value + rhs if op == "+" else value - rhs
    return value


def _term(sc: _Scanner) -> RationalFunction:
    value = _factor(sc)
    while sc.peek() in ("*", "/"):
        op = sc.take()
        rhs = _factor(sc)
        if op == "*":
            value = value * rhs
        else:
            if rhs.is_zero():
                raise DivisionByZeroFunction("division by the zero function")
            value = value / rhs
    return value


def _factor(sc: _Scanner) -> RationalFunction:
    if sc.peek() == "-":
        sc.take()
        return -_factor(sc)
    return _power(sc)


def _power(sc: _Scanner) -> RationalFunction:
    base = _base(sc)
    if sc.peek() != "^":
        return base
    sc.take()
    exponent = _factor(sc)
    if not exponent.num.is_constant() or exponent.den.degree > 0:
        sc.error("exponent must be an integer")
    const = exponent.num.coefficient(0)
    if const.denominator != 1:
        sc.error("exponent must be an integer")
    n = int(const)
    if n < 0 and base.is_zero():
        raise DivisionByZeroFunction("0 raised to a negative power")
    return base ** n


def _base(sc: _Scanner) -> RationalFunction:
    ch = sc.peek()
    if ch == "(":
        sc.take()
        value = _expr(sc)
        if sc.peek() != ")":
            sc.error("expected ')'")
        sc.take()
        return value
    if ch.isdigit():
        start = sc.pos
        while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
            sc.pos += 1
        return RationalFunction.constant(int(sc.text[start : sc.pos]))
    if ch.isalpha() or ch == "_":
        start = sc.pos
        while sc.pos < len(sc.text) and (sc.text[sc.pos].isalnum() or sc.text[sc.pos] == "_"):
            sc.pos += 1
        name = sc.text[start : sc.pos]
        if name != sc.var:
            sc.pos = start
            sc.error(f"unknown variable {name!r} (expected {sc.var!r})")
        return RationalFunction.x()
    sc.error("expected a number, variable or '('")
