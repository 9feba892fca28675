"""Local analysis of Fuchsian operators: singular places, indicial
polynomials, exponent multisets and the spread/ramification invariants.

Conventions
-----------
* Exponents at infinity are taken in the local variable t = 1/x, so y = x
  has exponent -1 there.  They are computed as roots of phi(-rho) where
  phi(s) = [s]_n + sum_i c_i [s]_i and c_i = lim x^(n-i) a_i(x); no operator
  transformation is needed.
* Infinity is reported as singular whenever the indicial polynomial there
  differs from the one of an ordinary point (roots 0..n-1).
* An algebraic place aggregates its deg(q) conjugate points; sums weight it
  by deg(q).  If residue arithmetic discovers that q factors, PlaceSplit is
  raised and list-level drivers re-dispatch on the factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NonRationalExponent,
    NotFuchsianAt,
    PlaceSplit,
    ZeroFunction,
)
from .operators import LinearODE
from .places import Place
from .poly import Polynomial, poly_gcd, rational_roots, resultant, squarefree_factor
from .qnum import ONE, Q, ZERO, lcd, qq
from .ratfunc import RationalFunction
from .residue import ResidueElement, invert_or_split


@dataclass(frozen=True)
class ExponentReport:
    """Exponent multiset E(L,p) with its spread and ramification data."""

    place: Place
    exponents: tuple  # sorted ascending, |E| = n with multiplicity
    delta: object  # max(E) - min(E) - (n - 1)
    ram_index: int  # least common denominator of all exponent differences
    apparent: bool  # exponents are distinct non-negative integers

    @property
    def weighted_delta(self):
        return self.place.degree * self.delta


def _falling_factorials(n: int):
    """[r]_0 .. [r]_n as polynomials in r."""
    out = [Polynomial.one()]
    r = Polynomial.x()
    for i in range(n):
        out.append(out[-1] * (r - i))
    return out


def _pole_order(den: Polynomial, q: Polynomial) -> tuple[int, Polynomial]:
    """Multiplicity of q in den, plus the cofactor den / q^mult."""
    v = 0
    while True:
        quot, rem = den.divmod(q)
        if not rem.is_zero():
            return v, den
        den = quot
        v += 1


def singular_places(L: LinearODE) -> list[Place]:
    """All places where some coefficient has a pole, plus infinity when the
    operator is not ordinary there.  Rational points are split off eagerly;
    other denominator factors stay aggregated as squarefree places."""
    places = []
    den = L.common_denominator()
    if den.degree > 0:
        for factor, _mult in squarefree_factor(den):
            rest = factor
            for root, _m in rational_roots(factor):
                places.append(Place.rational(root))
                rest = rest.exact_div(Polynomial([-root, ONE]))
            if rest.degree > 0:
                places.append(Place.finite(rest))
    if _infinity_is_singular(L):
        places.append(Place.infinity())
    return sorted(places)


def _coeff_limits_at_infinity(L: LinearODE):
    """c_i = lim x^(n-i) a_i; None when the limit diverges (irregular)."""
    n = L.order
    out = []
    for i in range(n):
        a = L.coefficients[i]
        if a.is_zero():
            out.append(ZERO)
            continue
        growth = a.degree_at_infinity()
        if growth > i - n:
            out.append(None)
        elif growth == i - n:
            out.append(a.num.lead / a.den.lead)
        else:
            out.append(ZERO)
    return out


def _indicial_at_infinity(L: LinearODE) -> Polynomial:
    """Indicial polynomial in the exponent rho of the local variable t=1/x."""
    limits = _coeff_limits_at_infinity(L)
    if any(c is None for c in limits):
        raise NotFuchsianAt(Place.infinity())
    n = L.order
    ff = _falling_factorials(n)
    phi = ff[n]
    for i, c in enumerate(limits):
        if c != 0:
            phi = phi + ff[i] * c
    # substitute s -> -rho
    coeffs = [(-1) ** k * c for k, c in enumerate(phi.coeffs)]
    return Polynomial(coeffs).monic()


def _ordinary_indicial(n: int) -> Polynomial:
    poly = Polynomial.one()
    r = Polynomial.x()
    for k in range(n):
        poly = poly * (r - k)
    return poly


def _infinity_is_singular(L: LinearODE) -> bool:
    try:
        ind = _indicial_at_infinity(L)
    except NotFuchsianAt:
        return True
    return ind != _ordinary_indicial(L.order)


def is_fuchsian_at(L: LinearODE, place: Place) -> bool:
    n = L.order
    if place.is_infinity:
        return all(c is not None for c in _coeff_limits_at_infinity(L))
    q = place.min_poly
    for i in range(n):
        a = L.coefficients[i]
        if a.is_zero():
            continue
        v, _ = _pole_order(a.den, q)
        if v > n - i:
            return False
    return True


def is_fuchsian(L: LinearODE) -> bool:
    """True iff every singular point, including infinity, is regular."""
    den = L.common_denominator()
    if den.degree > 0:
        for factor, _mult in squarefree_factor(den):
            if not is_fuchsian_at(L, Place.finite(factor)):
                return False
    return is_fuchsian_at(L, Place.infinity())


def indicial_polynomial(L: LinearODE, place: Place):
    """Indicial polynomial at the place.

    Returns a rational Polynomial in r when the residue field is Q (rational
    points and infinity); at an algebraic place, returns the list of
    coordinate polynomials [P_0, ..., P_{k-1}] of the residue-field-valued
    polynomial with respect to the power basis of Q[x]/(q).
    """
    coords = _indicial_coordinates(L, place)
    if len(coords) == 1:
        return coords[0]
    return coords


def _indicial_coordinates(L: LinearODE, place: Place) -> list[Polynomial]:
    if place.is_infinity:
        return [_indicial_at_infinity(L)]
    n = L.order
    q = place.min_poly
    k = q.degree
    ff = _falling_factorials(n)
    coords = [ff[n]] + [Polynomial.zero()] * (k - 1)
    qprime_inv = None
    if k > 1:
        qprime_inv = invert_or_split(ResidueElement(q, q.derivative() % q))
    for i in range(n):
        a = L.coefficients[i]
        if a.is_zero():
            continue
        v, cofactor = _pole_order(a.den, q)
        if v > n - i:
            raise NotFuchsianAt(place)
        # residue class of q^(n-i) * a_i, in uniformizer-corrected form
        num_mod = (a.num * q ** (n - i - v)) % q
        if num_mod.is_zero():
            continue
        cof_mod = cofactor % q
        g = poly_gcd(cof_mod, q)
        if g.degree > 0:
            raise PlaceSplit((g, q.exact_div(g).monic()))
        c = ResidueElement(q, num_mod) * invert_or_split(ResidueElement(q, cof_mod))
        if k > 1:
            c = c * qprime_inv ** (n - i)
        for m, coord in enumerate(c.coordinates()):
            if coord != 0:
                coords[m] = coords[m] + ff[i] * coord
    return coords


def _try_split_from_indicial(q: Polynomial, coords, known_roots) -> None:
    """Raise PlaceSplit if a rational exponent exists at some but not all
    conjugate points of q (detected via the resultant in the modulus
    variable).  Returns silently when no split is found."""
    k = q.degree
    n = max(c.degree for c in coords)
    # interpolate R(r) = res_alpha(q(alpha), P(r, alpha)) of degree <= n*k
    sample_count = n * k + 1
    xs, ys = [], []
    t = 0
    while len(xs) < sample_count:
        p_t = Polynomial([c(qq(t)) for c in coords])
        xs.append(Q(t))
        ys.append(resultant(q, p_t) if not p_t.is_zero() else ZERO)
        t += 1
    R = _interpolate(xs, ys)
    if R.is_zero():
        candidates = []
    else:
        candidates = [r for r, _m in rational_roots(R)]
    for r0 in candidates:
        if r0 in known_roots:
            continue
        value = Polynomial.zero()
        for m, c in enumerate(coords):
            value = value + Polynomial.monomial(m, 1) * c(r0)
        value = value % q
        if value.is_zero():
            continue
        g = poly_gcd(value, q)
        if 0 < g.degree < k:
            raise PlaceSplit((g, q.exact_div(g).monic()))


def _interpolate(xs, ys) -> Polynomial:
    out = Polynomial.zero()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        term = Polynomial.constant(yi)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            term = term * Polynomial([-xj, ONE]) * (1 / (xi - xj))
        out = out + term
    return out


def local_exponents(L: LinearODE, place: Place) -> ExponentReport:
    """Exponent report at the place.

    Raises NotFuchsianAt for an irregular place, NonRationalExponent when
    fewer than n rational indicial roots exist, and PlaceSplit when the
    computation shows the place's modulus factors.
    """
    n = L.order
    coords = _indicial_coordinates(L, place)
    nonzero = [c for c in coords if not c.is_zero()]
    g = nonzero[0]
    for c in nonzero[1:]:
        g = poly_gcd(g, c)
    roots = rational_roots(g)
    total = sum(m for _r, m in roots)
    if total < n:
        if not place.is_infinity and place.degree > 1:
            _try_split_from_indicial(place.min_poly, coords, {r for r, _m in roots})
        raise NonRationalExponent(place)
    exponents = []
    for r, m in roots:
        exponents.extend([r] * m)
    exponents.sort()
    exponents = tuple(exponents)
    delta = exponents[-1] - exponents[0] - (n - 1)
    diffs = [e - exponents[0] for e in exponents]
    ram = lcd(diffs)
    apparent = (
        len(set(exponents)) == n
        and all(e.denominator == 1 and e >= 0 for e in exponents)
    )
    return ExponentReport(
        place=place,
        exponents=exponents,
        delta=qq(delta),
        ram_index=int(ram),
        apparent=apparent,
    )


def exponent_reports(L: LinearODE, places=None) -> list[ExponentReport]:
    """Exponent reports over the given (default: all singular) places,
    re-dispatching on PlaceSplit events."""
    work = list(places if places is not None else singular_places(L))
    out = []
    while work:
        p = work.pop(0)
        try:
            out.append(local_exponents(L, p))
        except PlaceSplit as split:
            for factor in reversed(split.factors):
                rest = factor
                for root, _m in rational_roots(factor):
                    work.insert(0, Place.rational(root))
                    rest = rest.exact_div(Polynomial([-root, ONE]))
                if rest.degree > 0:
                    work.insert(0, Place.finite(rest))
    out.sort(key=lambda rep: rep.place)
    return out


def delta_total(L: LinearODE):
    """Sum of deg(p) * Delta(L,p) over all singular places."""
    return sum((rep.weighted_delta for rep in exponent_reports(L)), ZERO)


def fuchs_relation_check(L: LinearODE):
    """Classical Fuchs relation as (lhs, rhs, ok).

    lhs = sum over singular places of deg(p) * sum E(L,p);
    rhs = (n(n-1)/2) * (sum of deg(p) - 2).
    """
    reports = exponent_reports(L)
    n = L.order
    lhs = sum((rep.place.degree * sum(rep.exponents, ZERO) for rep in reports), ZERO)
    total_degree = sum(rep.place.degree for rep in reports)
    rhs = Q(n * (n - 1), 2) * (total_degree - 2)
    return qq(lhs), qq(rhs), lhs == rhs
