import pytest

from fuchskit import (
    catalog_entry,
    catalog_keys,
    catalog_operator,
    exponent_reports,
    fuchs_relation_check,
    is_fuchsian,
    parse_rational_function,
)
from fuchskit.errors import UnknownKey


def test_keys():
    keys = catalog_keys()
    for expected in ["G54", "F36", "F36-std", "H72", "H216", "3F2-klein", "3F2-h216",
                     "St:A4", "St:S4", "St:A5", "St:D4", "St:D6"]:
        assert expected in keys


def test_unknown_key():
    with pytest.raises(UnknownKey):
        catalog_entry("nope")


def test_round_trip_stability():
    # parse -> pretty-print -> parse is a fixed point on the whole catalog
    for key in catalog_keys():
        L = catalog_operator(key)
        for c in L.coefficients:
            assert parse_rational_function(str(c)) == c


def test_standard_entries_delegate():
    from fuchskit import standard_equation

    L = catalog_operator("St:A4")
    R = standard_equation("A4")
    assert all(a == b for a, b in zip(L.coefficients, R.coefficients))


def test_all_entries_fuchsian():
    for key in catalog_keys():
        L = catalog_operator(key)
        assert is_fuchsian(L), key
        _, _, ok = fuchs_relation_check(L)
        assert ok, key


def test_canonical_place_ordering():
    # rational points ascending, algebraic places next, infinity last
    for key in ["G54", "H72", "F36"]:
        reports = exponent_reports(catalog_operator(key))
        keys = [
            (2,) if r.place.is_infinity else ((1,) if r.place.degree > 1 else (0, r.place.root))
            for r in reports
        ]
        assert keys == sorted(keys), key


def test_pullback_partners_recorded():
    for key, partner in [("G54", "3F2-klein"), ("F36", "3F2-klein"), ("H72", "3F2-h216")]:
        entry = catalog_entry(key)
        assert entry.pullback_of == partner
        assert entry.pullback_map is not None
