import pytest

from fuchskit import (
    LinearODE,
    catalog_operator,
    genus_from_cover,
    genus_report,
    hurwitz_sum,
    pullback_delta_identity,
)
from fuchskit.errors import NotFuchsian
from fuchskit.parsing import parse_rational_function as P
from fuchskit.qnum import Q


def op(*coeffs):
    return LinearODE([P(s) for s in coeffs])


def test_hurwitz_trivial():
    assert hurwitz_sum(op("0", "0")) == Q(0)


def test_genus_from_cover():
    assert genus_from_cover(Q(0), 1, 0) == Q(0)
    assert genus_from_cover(Q(2), 18, 0) == Q(1)
    assert genus_from_cover(Q(9, 4), 72, 0) == Q(10)
    assert genus_from_cover(Q(25, 12), 216, 0) == Q(10)
    # base genus enters through 2(g0 - 1)
    assert genus_from_cover(Q(0), 3, 1) == Q(1)


def test_catalog_genus_reports():
    for key, M, h, g in [
        ("G54", 18, Q(2), Q(1)),
        ("F36", 36, Q(2), Q(1)),
        ("F36-std", 36, Q(2), Q(1)),
        ("H72", 72, Q(9, 4), Q(10)),
        ("H216", 216, Q(25, 12), Q(10)),
    ]:
        rep = genus_report(catalog_operator(key), M)
        assert rep.hurwitz_sum == h, key
        assert rep.genus == g, key


def test_hurwitz_not_fuchsian():
    with pytest.raises(NotFuchsian):
        hurwitz_sum(op("-x", "0"))


def test_delta_identity_examples():
    lhs, rhs, ok = pullback_delta_identity(op("0", "0"), P("x^2"))
    assert (lhs, rhs, ok) == (Q(4), Q(4), True)
    lhs, rhs, ok = pullback_delta_identity(
        catalog_operator("3F2-klein"),
        P("(1/16)*(x^2+1)^4/(x^2*(x+1)^2*(x-1)^2)"),
    )
    assert ok and lhs == rhs
