"""Rational functions over Q: reduced fractions of polynomials.

Invariants: gcd(num, den) = 1, den monic and nonzero.
"""

from __future__ import annotations

from .errors import DivisionByZeroFunction, ZeroFunction
from .poly import Polynomial, poly_gcd, poly_lcm
from .qnum import qq


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(qq(value))


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced=False):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise DivisionByZeroFunction("denominator is identically zero")
        if _reduced:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = Polynomial.zero(), Polynomial.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lb = den.lead
        if lb != 1:
            num = num * (1 / lb)
            den = den.monic()
        self.num, self.den = num, den

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return RationalFunction(0)

    @staticmethod
    def one():
        return RationalFunction(1)

    @staticmethod
    def x():
        return RationalFunction(Polynomial.x())

    @staticmethod
    def constant(c):
        return RationalFunction(Polynomial.constant(c))

    @staticmethod
    def from_factored(num: Polynomial, factors):
        """Build num / prod(q**m) cancelling only the known factors.

        ``factors`` is a list of (monic Polynomial, multiplicity).  Avoids a
        full gcd when the denominator factorization is already known.
        """
        den = Polynomial.one()
        for q, m in factors:
            for _ in range(m):
                if num.is_zero():
                    break
                quot, rem = num.divmod(q)
                if rem.is_zero():
                    num = quot
                else:
                    den = den * q
        lb = den.lead
        if lb != 1:
            num = num * (1 / lb)
            den = den.monic()
        return RationalFunction(num, den, _reduced=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self):
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RationalFunction(
                self.num * other.den + other.num * self.den,
                self.den * other.den,
            )
        da = self.den.exact_div(g)
        db = other.den.exact_div(g)
        return RationalFunction(self.num * db + other.num * da, self.den * db)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero()
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree else self.num
        d2 = other.den.exact_div(g1) if g1.degree else other.den
        n2 = other.num.exact_div(g2) if g2.degree else other.num
        d1 = self.den.exact_div(g2) if g2.degree else self.den
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroFunction("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n, _reduced=True)

    # -- calculus -------------------------------------------------------------

    def derivative(self):
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RationalFunction(num, self.den * self.den)

    def __call__(self, point):
        """Evaluate at a rational point (den(point) must be nonzero)."""
        dv = self.den(point)
        if dv == 0:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num(point) / dv

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """self(inner(x)) by Horner over the rational-function field."""
        num = RationalFunction.zero()
        for c in reversed(self.num.coeffs):
            num = num * inner + RationalFunction.constant(c)
        den = RationalFunction.zero()
        for c in reversed(self.den.coeffs):
            den = den * inner + RationalFunction.constant(c)
        return num / den

    def degree_at_infinity(self) -> int:
        """deg num - deg den; the order of growth at infinity."""
        return self.num.degree - self.den.degree

    def __repr__(self):
        return f"RationalFunction({self!s})"

    def __str__(self):
        if self.den.degree == 0 and self.den == Polynomial.one():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _coerce(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    try:
        return RationalFunction.constant(qq(value))
    except (TypeError, ValueError):
        return NotImplemented


def change_to_infinity(f: RationalFunction) -> RationalFunction:
    """Substitute x -> 1/t, returning f(1/t) as a rational function of t."""
    n, d = f.num, f.den
    dn, dd = n.degree, d.degree
    if f.is_zero():
        return f
    m = max(dn, dd)
    # f(1/t) = t^(m-dn) rev(n) / ( t^(m-dd) rev(d) )
    num = n.reverse().shift_up(m - dn)
    den = d.reverse().shift_up(m - dd)
    return RationalFunction(num, den)


def valuation(f: RationalFunction, q: Polynomial) -> int:
    """Order of vanishing of f along the monic squarefree polynomial q."""
    if f.is_zero():
        raise ZeroFunction("valuation of the zero function")
    v = 0
    num = f.num
    while True:
        quot, rem = num.divmod(q)
        if not rem.is_zero():
            break
        num = quot
        v += 1
    if v:
        return v
    den = f.den
    while True:
        quot, rem = den.divmod(q)
        if not rem.is_zero():
            break
        den = quot
        v -= 1
    return v


def rat_lcm_denominator(funcs) -> Polynomial:
    den = Polynomial.one()
    for f in funcs:
        den = poly_lcm(den, f.den)
    return den.monic()
