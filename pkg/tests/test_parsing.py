import pytest
from hypothesis import given, strategies as st

from fuchskit.errors import DivisionByZeroFunction, ExpressionSyntaxError
from fuchskit.parsing import parse_rational_function as parse
from fuchskit.qnum import Q
from fuchskit.ratfunc import RationalFunction


def test_constants_and_powers():
    assert parse("x^0") == RationalFunction.one()
    assert parse("3/4") == RationalFunction.constant(Q(3, 4))
    assert parse("x^2") == RationalFunction.x() ** 2
    assert parse("x^-1") == RationalFunction.x() ** -1


def test_displayed_coefficient():
    f = parse("(3*(3*x^2-1))/(x*(x-1)*(x+1))")
    x = RationalFunction.x()
    assert f == 3 * (3 * x**2 - 1) / (x * (x - 1) * (x + 1))


def test_precedence():
    # '^' binds tighter than unary minus
    assert parse("-x^2") == -(RationalFunction.x() ** 2)
    assert parse("2/3*x") == Q(2, 3) * RationalFunction.x()
    assert parse("2-3-4") == RationalFunction.constant(-5)
    assert parse("2/3/4") == RationalFunction.constant(Q(1, 6))


def test_whitespace_insensitive():
    assert parse(" ( x + 1 ) ^ 2 ") == parse("(x+1)^2")


def test_zero_denominator():
    with pytest.raises(DivisionByZeroFunction):
        parse("1/(x-x)")


def test_syntax_errors_have_position():
    for text in ["", "x +", "(x", "x^", "x^y", "1..2", "x**2"]:
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse(text)
        assert "position" in str(exc.value)


@st.composite
def rational_functions(draw):
    num = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
    den = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
    from fuchskit.poly import Polynomial

    d = Polynomial(den)
    if d.is_zero():
        d = Polynomial.one()
    return RationalFunction(Polynomial(num), d)


@given(rational_functions())
def test_str_parse_round_trip(f):
    assert parse(str(f)) == f
