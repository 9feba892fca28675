"""Arithmetic in Q[x] / (q) for a monic squarefree modulus q.

The modulus is never factored up front.  If an inversion discovers a zero
divisor, the extended gcd exposes a nontrivial factor of q and the operation
reports a SplitEvent so the caller can redo its computation on each factor
(dynamic evaluation in the D5 style).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResidueZeroDivision
from .poly import Polynomial, poly_gcd
from .qnum import qq


@dataclass(frozen=True)
class SplitEvent:
    """A discovered factorization q = prod(factors); factors monic, coprime."""

    modulus: Polynomial
    factors: tuple


class ResidueElement:
    __slots__ = ("modulus", "value")

    def __init__(self, modulus: Polynomial, value):
        if not isinstance(value, Polynomial):
            value = Polynomial.constant(qq(value))
        self.modulus = modulus
        self.value = value % modulus if value.degree >= modulus.degree else value

    def _wrap(self, value):
        return ResidueElement(self.modulus, value)

    def is_zero(self):
        return self.value.is_zero()

    def __bool__(self):
        return not self.value.is_zero()

    def __eq__(self, other):
        if isinstance(other, ResidueElement):
            return self.modulus == other.modulus and self.value == other.value
        return self.value == Polynomial.constant(qq(other))

    def __hash__(self):
        return hash((self.modulus, self.value))

    def __add__(self, other):
        return self._wrap(self.value + _val(other))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.value)

    def __sub__(self, other):
        return self._wrap(self.value - _val(other))

    def __rsub__(self, other):
        return self._wrap(_val(other) - self.value)

    def __mul__(self, other):
        return self._wrap(self.value * _val(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = residue_invert(self)
            if isinstance(inv, SplitEvent):
                raise _split_error(inv)
            return inv ** (-n)
        out = self._wrap(Polynomial.one())
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def coordinates(self):
        """Coefficients w.r.t. the power basis 1, x, ..., x^(deg q - 1)."""
        k = self.modulus.degree
        return tuple(self.value.coefficient(i) for i in range(k))

    def lift(self) -> Polynomial:
        return self.value

    def as_rational(self):
        """The value as a rational number (degree-1 modulus only)."""
        if self.modulus.degree != 1:
            raise ValueError("residue field is a proper extension of Q")
        return self.value.coefficient(0)

    def __repr__(self):
        return f"ResidueElement({self.value} mod {self.modulus})"


def _val(other):
    if isinstance(other, ResidueElement):
        return other.value
    if isinstance(other, Polynomial):
        return other
    return Polynomial.constant(qq(other))


def _split_error(event: SplitEvent):
    from .errors import PlaceSplit

    return PlaceSplit(event.factors)


def residue_invert(e: ResidueElement):
    """Multiplicative inverse mod q, or a SplitEvent.

    Runs the extended Euclidean algorithm on (value, q).  A gcd of positive
    degree is a nontrivial factor of the squarefree modulus; the factor pair
    is returned as a SplitEvent instead of an inverse.
    """
    if e.is_zero():
        raise ResidueZeroDivision("cannot invert 0 in the residue ring")
    q = e.modulus
    g, s = _ext_gcd_partial(e.value, q)
    if g.degree == 0:
        c = g.coefficient(0)
        return ResidueElement(q, s * (1 / c))
    other = q.exact_div(g).monic()
    return SplitEvent(q, (g.monic(), other))


def invert_or_split(e: ResidueElement) -> ResidueElement:
    """residue_invert that raises PlaceSplit on a split (internal helper)."""
    out = residue_invert(e)
    if isinstance(out, SplitEvent):
        raise _split_error(out)
    return out


def _ext_gcd_partial(a: Polynomial, m: Polynomial):
    """Returns (g, s) with s*a = g mod m, g = gcd(a, m)."""
    r0, r1 = m, a % m
    s0, s1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero():
        quot, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
    return r0, s0 % m


def valuation_and_lead(f, q: Polynomial):
    """(v_q(f), class of f/q^v mod q) for a nonzero rational function f."""
    from .ratfunc import RationalFunction, valuation

    v = valuation(f, q)
    unit = f * RationalFunction(q) ** (-v)
    return v, residue_of_rational(unit, q)


def residue_of_rational(f, q: Polynomial):
    """Class of the rational function f mod q; requires v_q(f) >= 0.

    Splits (via PlaceSplit) if the denominator shares a factor with q
    without being divisible by it in the role of a unit.
    """
    from .ratfunc import RationalFunction

    assert isinstance(f, RationalFunction)
    num = ResidueElement(q, f.num % q)
    den_poly = f.den % q
    if den_poly.is_zero():
        raise ZeroDivisionError("rational function has a pole along the modulus")
    g = poly_gcd(den_poly, q)
    if g.degree > 0:
        raise _split_error(SplitEvent(q, (g, q.exact_div(g).monic())))
    den = ResidueElement(q, den_poly)
    return num * invert_or_split(den)
