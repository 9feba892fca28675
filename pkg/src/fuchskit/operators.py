"""Monic scalar linear differential operators over Q(x)."""

from __future__ import annotations

from .poly import Polynomial, poly_lcm
from .ratfunc import RationalFunction


def _as_rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    return RationalFunction.constant(value)


class LinearODE:
    """y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0 with a_i in Q(x).

    ``coefficients`` lists a_0 ... a_{n-1}; the leading coefficient is an
    implicit 1.  Immutable.
    """

    __slots__ = ("coefficients", "var")

    def __init__(self, coefficients, var: str = "x"):
        coeffs = tuple(_as_rf(c) for c in coefficients)
        if not coeffs:
            raise ValueError("operator needs order >= 1")
        self.coefficients = coeffs
        self.var = var

    @staticmethod
    def from_coefficients(coefficients, leading=None, var: str = "x"):
        """Build from a_0..a_{n-1} plus an optional non-unit leading a_n."""
        coeffs = [_as_rf(c) for c in coefficients]
        if leading is not None:
            lead = _as_rf(leading)
            if lead.is_zero():
                raise ValueError("leading coefficient must be nonzero")
            coeffs = [c / lead for c in coeffs]
        return LinearODE(coeffs, var=var)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def coefficient(self, i: int) -> RationalFunction:
        """a_i, with a_n = 1."""
        if i == self.order:
            return RationalFunction.one()
        return self.coefficients[i]

    def common_denominator(self) -> Polynomial:
        den = Polynomial.one()
        for c in self.coefficients:
            den = poly_lcm(den, c.den)
        return den.monic()

    def apply_to(self, funcs_and_derivs):
        """Apply the operator given the list [y, y', ..., y^(n)]."""
        out = _as_rf(funcs_and_derivs[self.order])
        for i, a in enumerate(self.coefficients):
            out = out + a * funcs_and_derivs[i]
        return out

    def apply_to_rational(self, f: RationalFunction) -> RationalFunction:
        derivs = [f]
        for _ in range(self.order):
            derivs.append(derivs[-1].derivative())
        return self.apply_to(derivs)

    def is_solution(self, f: RationalFunction) -> bool:
        return self.apply_to_rational(f).is_zero()

    def __eq__(self, other):
        if not isinstance(other, LinearODE):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearODE({self})"

    def __str__(self):
        n = self.order
        parts = [f"D^{n}" if n > 1 else "D"]
        for i in range(n - 1, -1, -1):
            a = self.coefficients[i]
            if a.is_zero():
                continue
            term = f"D^{i}" if i > 1 else ("D" if i == 1 else "")
            parts.append(f"{a}*{term}" if term else f"{a}")
        return " + ".join(parts)
