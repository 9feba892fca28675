"""Operator transformations: pullback along rational maps, exp-product
twists, projective normalization and the equivalence decision procedure.

A twist by r multiplies solutions by exp(integral of r); two operators are
projectively equivalent when they differ by such a twist, and killing the
a_{n-1} coefficient (r = -a_{n-1}/n) is a complete normal form for that
relation because the killing twist is unique.
"""

from __future__ import annotations

from .errors import DegenerateMap, OrderMismatch
from .operators import LinearODE
from .places import Place
from .poly import Polynomial, squarefree_factor
from .qnum import Q
from .ratfunc import RationalFunction, change_to_infinity, valuation
from .residue import residue_of_rational


class RationalMap:
    """A non-constant map f between projective lines; degree = max(deg num,
    deg den)."""

    __slots__ = ("f", "degree")

    def __init__(self, f: RationalFunction):
        if not isinstance(f, RationalFunction):
            f = RationalFunction(f)
        if f.num.degree <= 0 and f.den.degree <= 0:
            raise DegenerateMap("constant map has no well-defined pullback")
        self.f = f
        self.degree = max(f.num.degree, f.den.degree)

    def __repr__(self):
        return f"RationalMap({self.f}, degree={self.degree})"


def exp_product(L: LinearODE, r: RationalFunction) -> LinearODE:
    """Monic operator whose solutions are exp(integral of r) times the
    solutions of L.

    If z = u*y with u'/u = r then y^(k) = u^(-1) (D - r)^k z, so the twisted
    operator is sum a_k (D - r)^k, which is already monic.  Twists whose r
    has a pole of order >= 2 (or a pole at infinity) can make a regular
    singular point irregular; see twist_preserves_fuchsianity.
    """
    if not isinstance(r, RationalFunction):
        r = RationalFunction.constant(r)
    n = L.order
    zero = RationalFunction.zero()
    # rows[k][i]: coefficient of z^(i) in (D - r)^k z
    row = [RationalFunction.one()] + [zero] * n
    total = [c * L.coefficient(0) for c in row]
    for k in range(1, n + 1):
        nxt = [zero] * (n + 1)
        for i in range(k + 1):
            c = row[i]
            if c.is_zero():
                continue
            nxt[i] = nxt[i] + c.derivative() - r * c
            nxt[i + 1] = nxt[i + 1] + c
        row = nxt
        a_k = L.coefficient(k)
        if not a_k.is_zero():
            total = [t + c * a_k for t, c in zip(total, row)]
    assert total[n] == RationalFunction.one()
    return LinearODE(total[:n], var=L.var)


def twist_preserves_fuchsianity(r: RationalFunction) -> bool:
    """True when the twist exp(integral of r) keeps regular singularities
    regular: r has at most simple finite poles and no pole at infinity."""
    if r.is_zero():
        return True
    if r.degree_at_infinity() > -1:
        return False
    return all(m == 1 for _f, m in squarefree_factor(r.den))


def projective_normalize(L: LinearODE) -> LinearODE:
    """The unique exp-product twist of L with zero sub-leading coefficient."""
    n = L.order
    a = L.coefficient(n - 1)
    if a.is_zero():
        return L
    # with the solutions-times-exp(integral r) convention, the sub-leading
    # coefficient of the twist is a_{n-1} - n*r, so r = a_{n-1}/n kills it
    return exp_product(L, a * Q(1, n))


def projectively_equivalent(L1: LinearODE, L2: LinearODE) -> bool:
    if L1.order != L2.order:
        raise OrderMismatch(f"orders {L1.order} and {L2.order} differ")
    return projective_normalize(L1) == projective_normalize(L2)


def pullback(L0: LinearODE, f) -> LinearODE:
    """Monic order-n operator annihilating {y(f(x)) : L0(y) = 0}.

    d^k/dx^k of y(f) is expanded in the basis y(f), ..., y^(n-1)(f) by the
    chain rule, with y^(n)(f) reduced through L0.  The n+1 rows are
    triangular with diagonal (f')^k for k < n, so the left kernel comes from
    a backsolve.
    """
    if not isinstance(f, RationalMap):
        f = RationalMap(f)
    fn = f.f
    n = L0.order
    zero = RationalFunction.zero()
    fprime = fn.derivative()
    if fprime.is_zero():
        raise DegenerateMap("constant map has no well-defined pullback")
    a_comp = [L0.coefficient(i).compose(fn) for i in range(n)]
    rows = [[RationalFunction.one()] + [zero] * (n - 1)]
    for _k in range(n):
        cur = rows[-1]
        nxt = [c.derivative() for c in cur]
        top = cur[n - 1] * fprime
        for j in range(n):
            if j > 0 and not cur[j - 1].is_zero():
                nxt[j] = nxt[j] + fprime * cur[j - 1]
            if not top.is_zero() and not a_comp[j].is_zero():
                nxt[j] = nxt[j] - top * a_comp[j]
        rows.append(nxt)
    # solve rows[n] + sum_k b_k rows[k] = 0 using the triangular structure
    residual = list(rows[n])
    coeffs = [zero] * n
    diag = RationalFunction.one()
    diags = []
    for k in range(n):
        diags.append(diag)
        diag = diag * fprime
    for k in range(n - 1, -1, -1):
        b = -residual[k] / diags[k]
        coeffs[k] = b
        if not b.is_zero():
            residual = [resid + b * c for resid, c in zip(residual, rows[k])]
    assert all(c.is_zero() for c in residual)
    return LinearODE(coeffs, var=L0.var)


def ramification_index(f, place: Place) -> int:
    """Ramification index of the map at the place: the valuation there of
    f - f(place) (or of 1/f at a pole of f)."""
    if not isinstance(f, RationalMap):
        f = RationalMap(f)
    fn = f.f
    if place.is_infinity:
        fn = change_to_infinity(fn)
        q = Polynomial.x()
    else:
        q = place.min_poly
    v = valuation(fn, q)
    if v < 0:
        return -v
    value = residue_of_rational(fn, q)
    return valuation(fn - RationalFunction(value.lift()), q)


def map_image(f, place: Place) -> Place:
    """The image place f(p) (rational and infinite places only)."""
    if not isinstance(f, RationalMap):
        f = RationalMap(f)
    fn = f.f
    if place.is_infinity:
        fn = change_to_infinity(fn)
        q = Polynomial.x()
    else:
        q = place.min_poly
        if q.degree > 1:
            raise ValueError("image of an algebraic place is not implemented")
    if valuation(fn, q) < 0:
        return Place.infinity()
    value = residue_of_rational(fn, q)
    return Place.rational(value.as_rational())
