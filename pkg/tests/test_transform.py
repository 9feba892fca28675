import random

import pytest

from fuchskit import (
    LinearODE,
    Place,
    RationalMap,
    catalog_operator,
    exp_product,
    local_exponents,
    map_image,
    projective_normalize,
    projectively_equivalent,
    pullback,
    ramification_index,
    singular_places,
)
from fuchskit.errors import DegenerateMap, OrderMismatch
from fuchskit.parsing import parse_rational_function as P
from fuchskit.qnum import Q

from oracles import ordinary_point, random_fuchsian, random_rational_map, series_solution, series_mul, apply_operator_to_series


def op(*coeffs):
    return LinearODE([P(s) for s in coeffs])


def test_rational_map_degree():
    assert RationalMap(P("x^2")).degree == 2
    assert RationalMap(P("(x^2+1)/(x^3-x)")).degree == 3
    with pytest.raises(DegenerateMap):
        RationalMap(P("5"))


def test_exp_product_scalar_shift():
    # exp-product by constant r shifts D -> D - r: y'' = 0 becomes (D-1)^2
    L = exp_product(op("0", "0"), P("1"))
    assert [str(c) for c in L.coefficients] == ["1", "-2"]


def test_exp_product_exponent_shift():
    # twisting by r = c/x shifts all exponents at 0 by c
    L = op("-2/x^2", "0")  # exponents at 0: -1, 2
    twisted = exp_product(L, P("1/x"))
    rep = local_exponents(twisted, Place.rational(0))
    assert sorted(rep.exponents) == [Q(0), Q(3)]


def test_projective_normalize():
    L = op("2/x^2", "-2/x")
    N = projective_normalize(L)
    assert N.coefficient(1).is_zero()
    # normalization is idempotent
    N2 = projective_normalize(N)
    assert all(a == b for a, b in zip(N.coefficients, N2.coefficients))


def test_equivalence_under_twist():
    rng = random.Random(9)
    for _ in range(10):
        L = random_fuchsian(rng, rng.choice([2, 3]))
        r = P("1/(x-4)") * Q(rng.randint(-3, 3)) + Q(rng.randint(-2, 2))
        assert projectively_equivalent(L, exp_product(L, r))
    with pytest.raises(OrderMismatch):
        projectively_equivalent(op("0"), op("0", "0"))


def test_inequivalent():
    assert not projectively_equivalent(op("0", "0"), op("-1", "0"))


def test_pullback_square_map():
    # y'' = 0 pulled back through x^2: solutions 1, x^2 -> y'' = (1/x) y' ... check via solutions
    M = pullback(op("0", "0"), P("x^2"))
    assert M.is_solution(P("x^2"))
    assert M.is_solution(P("1"))


def test_pullback_composes_solutions():
    # if y solves L0 then y(f(x)) solves pullback(L0, f)
    L0 = op("2/x^2", "-2/x")  # solutions x, x^2
    for fs in ["x^2", "(x+1)/(x-1)", "x^3-2*x"]:
        f = P(fs)
        M = pullback(L0, f)
        assert M.is_solution(f)
        assert M.is_solution(f * f)


def test_pullback_degree_multiplicativity():
    # pullback by f then by g is projectively the pullback by f(g(x))
    L0 = op("-1/(4*x^2)", "0")
    f, g = P("x^2"), P("(x+2)/(x-1)")
    via_two = pullback(pullback(L0, f), g)
    via_one = pullback(L0, f.compose(g))
    assert projectively_equivalent(via_two, via_one)


def test_ramification_index():
    f = P("x^2")
    assert ramification_index(f, Place.rational(0)) == 2
    assert ramification_index(f, Place.rational(1)) == 1
    assert ramification_index(f, Place.infinity()) == 2
    assert str(map_image(f, Place.rational(3))) == "x=9"
    assert str(map_image(P("1/x"), Place.rational(0))) == "infinity"

    g = P("(1/2)*(x+1)^3/(1+3*x^2)")
    assert ramification_index(g, Place.rational(-1)) == 3


def test_pullback_exponent_scaling():
    # at an unramified preimage of a singular point, exponents are unchanged
    L0 = catalog_operator("3F2-klein")
    f = P("x^2")
    M = pullback(L0, f)
    e0 = sorted(local_exponents(L0, Place.rational(1)).exponents)
    for pre in (1, -1):
        rep = local_exponents(M, Place.rational(pre))
        assert sorted(rep.exponents) == e0
    # at the double preimage of 0, exponents double
    e_at_0 = sorted(local_exponents(L0, Place.rational(0)).exponents)
    rep = local_exponents(M, Place.rational(0))
    assert sorted(rep.exponents) == [2 * e for e in e_at_0]
