import random

import pytest

from fuchskit import (
    LinearODE,
    default_degree,
    derivative_equation,
    line_bundle_degree,
    rational_solutions,
    ruled_surface,
    standard_equation,
    standard_spec,
    symmetric_power,
)
from fuchskit.errors import NotInReducedForm, OrderMismatch, UnknownGroup
from fuchskit.parsing import parse_rational_function as P
from fuchskit.qnum import Q

from oracles import (
    apply_operator_to_series,
    brute_force_rational_solutions,
    ordinary_point,
    random_fuchsian,
    same_span,
    series_mul,
    series_solution,
)


def op(*coeffs):
    return LinearODE([P(s) for s in coeffs])


def test_standard_spec_a4():
    spec = standard_spec("A4")
    assert (spec.lam, spec.mu, spec.nu) == (Q(1, 3), Q(1, 2), Q(1, 3))
    assert (spec.a, spec.b, spec.c) == (Q(2, 9), Q(3, 16), Q(-3, 16))


def test_standard_equation_shape():
    L = standard_equation("S4")
    assert L.order == 2
    assert L.coefficient(1).is_zero()
    with pytest.raises(UnknownGroup):
        standard_equation("E8")
    with pytest.raises(UnknownGroup):
        standard_equation("D5")  # odd order is not a D_{2n}


def test_default_degrees():
    assert default_degree("A4") == 24
    assert default_degree("S4") == 24
    assert default_degree("A5") == 60
    assert default_degree("D4") == 4   # n = 2 even -> 2n
    assert default_degree("D6") == 12  # n = 3 odd  -> 4n
    assert default_degree("D8") == 8
    assert default_degree("D10") == 20


def test_symmetric_power_trivial():
    # Sym^d of y'' = 0 annihilates 1, x, ..., x^d: it is D^(d+1)
    for d in (2, 5):
        M = symmetric_power(op("0", "0"), d)
        assert M.order == d + 1
        assert all(c.is_zero() for c in M.coefficients)


def test_symmetric_power_products():
    # solutions x and x^2 of L give d-fold products x^d .. x^2d
    L = op("2/x^2", "-2/x")
    M = symmetric_power(L, 3)
    for k in range(3, 7):
        assert M.is_solution(P("x")**k)


def test_symmetric_power_series_oracle():
    rng = random.Random(2)
    N = 30
    for _ in range(3):
        L = random_fuchsian(rng, 2)
        d = rng.randint(2, 4)
        M = symmetric_power(L, d)
        x0 = ordinary_point(L)
        while M.common_denominator()(x0) == 0:
            x0 += 1
        s1 = series_solution(L, x0, [1, 0], N)
        s2 = series_solution(L, x0, [0, 1], N)
        prod = [Q(1)] + [Q(0)] * (N - 1)
        for _ in range(d - 1):
            prod = series_mul(prod, s1)
        prod = series_mul(prod, s2)
        out = apply_operator_to_series(M, x0, prod)
        assert all(c == 0 for c in out[: N - M.order])


def test_derivative_equation():
    L = op("-x", "0")
    D = derivative_equation(L)
    # y'' - (f'/f) y' - f y with f = x
    assert [str(c) for c in D.coefficients] == ["-x", "(-1)/(x)"]
    with pytest.raises(OrderMismatch):
        derivative_equation(op("0"))
    with pytest.raises(NotInReducedForm):
        derivative_equation(op("0", "1"))


def test_rational_solutions_examples():
    L = op("2/x^2", "-2/x")  # solutions x, x^2
    basis = rational_solutions(L)
    assert same_span(list(basis.basis), [P("x"), P("x^2")])
    # irregular at infinity: no rational solutions, still total
    assert len(rational_solutions(op("-1", "0"))) == 0


def test_rational_solutions_with_poles():
    # indicial at 0 is (r+2)(r+3): solutions x^-2 and x^-3
    L = op("6/x^2", "6/x")
    basis = rational_solutions(L)
    assert same_span(list(basis.basis), [P("1/x^2"), P("1/x^3")])


def test_rational_solutions_brute_force():
    rng = random.Random(31)
    for _ in range(8):
        L = random_fuchsian(rng, 2)
        mine = list(rational_solutions(L).basis)
        brute = brute_force_rational_solutions(L)
        assert same_span(mine, brute)
        for f in mine:
            assert L.is_solution(f)


def test_line_bundle_degree_known_list():
    x = P("x")
    known = [x**8 * (x - 1) ** 8, x**8 * (x - 1) ** 7, x**9 * (x - 1) ** 6, x**8 * (x - 1) ** 6]
    deg, gens = line_bundle_degree(known)
    assert deg == 2
    assert [str(g) for g in gens] == ["x^2 - 2*x + 1", "x - 1", "x", "1"]


def test_ruled_surface_d4():
    desc = ruled_surface("D4")
    assert (desc.deg_l, desc.deg_lprime, desc.twist) == (1, 5, 4)


def test_ruled_surface_d6():
    desc = ruled_surface("D6")
    assert (desc.deg_l, desc.deg_lprime, desc.twist) == (2, 14, 12)
