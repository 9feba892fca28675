import random

import pytest

from fuchskit import (
    LinearODE,
    Place,
    catalog_operator,
    delta_total,
    exponent_reports,
    fuchs_relation_check,
    indicial_polynomial,
    is_fuchsian,
    is_fuchsian_at,
    local_exponents,
    singular_places,
)
from fuchskit.errors import NonRationalExponent, NotFuchsian
from fuchskit.parsing import parse_rational_function as P
from fuchskit.poly import Polynomial
from fuchskit.qnum import Q

from oracles import compose, random_fuchsian


def op(*coeffs):
    return LinearODE([P(s) for s in coeffs])


AIRY = op("-x", "0")  # y'' = x y: irregular at infinity
CAUCHY = op("1/x^2", "-1/x")  # exponents at 0 and infinity are 1 (double)


def test_singular_places():
    G54 = catalog_operator("G54")
    assert [str(p) for p in singular_places(G54)] == ["x=-1", "x=0", "x=1", "infinity"]
    # y'' = 0 has exponents {-1, 0} at infinity, not the ordinary {0, 1}
    assert [str(p) for p in singular_places(op("0", "0"))] == ["infinity"]
    assert [str(p) for p in singular_places(AIRY)] == ["infinity"]
    assert [str(p) for p in singular_places(op("0", "2/x"))] == ["x=0"]


def test_is_fuchsian():
    assert is_fuchsian(catalog_operator("G54"))
    assert not is_fuchsian(AIRY)
    assert is_fuchsian_at(AIRY, Place.rational(0))
    assert not is_fuchsian_at(AIRY, Place.infinity())
    assert not is_fuchsian(op("0", "1/x^2"))  # a1 pole order 2 > 1


def test_indicial_g54_at_zero():
    # roots -1/6, 1/3, 4/3 (known exponent set at x=0)
    G54 = catalog_operator("G54")
    ind = indicial_polynomial(G54, Place.rational(0))
    x = Polynomial.x()
    expected = ((x + Q(1, 6)) * (x - Q(1, 3)) * (x - Q(4, 3))).monic()
    assert ind.monic() == expected


def test_infinity_convention():
    # y = x solves y'' = 0; exponent of x at infinity is -1
    rep = local_exponents(op("0", "0"), Place.infinity())
    assert sorted(rep.exponents) == [Q(-1), Q(0)]


def test_exponent_report_fields():
    rep = local_exponents(CAUCHY, Place.rational(0))
    assert sorted(rep.exponents) == [Q(1), Q(1)]
    assert rep.delta == Q(-1)
    assert rep.ram_index == 1
    assert not rep.apparent  # repeated root: not an apparent singularity

    H72 = catalog_operator("H72")
    rep = local_exponents(H72, Place.rational(1))
    assert sorted(rep.exponents) == [Q(0), Q(1), Q(3)]
    assert rep.apparent and rep.ram_index == 1


def test_algebraic_place():
    H72 = catalog_operator("H72")
    q = Polynomial([Q(1, 3), Q(0), Q(1)])  # x^2 + 1/3
    rep = local_exponents(H72, Place.finite(q))
    assert sorted(rep.exponents) == [Q(-7, 12), Q(-1, 3), Q(-1, 12)]
    assert rep.ram_index == 4
    assert rep.place.degree == 2


def test_place_splitting_from_reports():
    # denominator factor x^2 - 1 must split into the places x = 1, x = -1
    L = op("0", "1/(x^2-1)")
    places = [str(r.place) for r in exponent_reports(L)]
    assert places == ["x=-1", "x=1", "infinity"]


def test_non_rational_exponents():
    # indicial at 0 of x^2 y'' + x y' - 2 y is r^2 - 2
    L = op("-2/x^2", "1/x")
    with pytest.raises(NonRationalExponent):
        local_exponents(L, Place.rational(0))


def test_delta_total_and_fuchs_relation():
    G54 = catalog_operator("G54")
    assert delta_total(G54) == Q(-2)
    lhs, rhs, ok = fuchs_relation_check(G54)
    assert (lhs, rhs, ok) == (Q(6), Q(6), True)
    with pytest.raises(NotFuchsian):
        fuchs_relation_check(AIRY)


def test_fuchs_relation_random():
    rng = random.Random(123)
    for _ in range(25):
        L = random_fuchsian(rng, rng.choice([2, 3]))
        _, _, ok = fuchs_relation_check(L)
        assert ok


def test_composition_is_fuchsian():
    rng = random.Random(4)
    for _ in range(10):
        a = random_fuchsian(rng, 1)
        b = random_fuchsian(rng, 2)
        assert is_fuchsian(compose(a, b))
