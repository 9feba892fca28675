"""Arbitrary-precision rational numbers.

All exact scalar arithmetic in the package goes through ``Q``.  gmpy2's mpq
is used when available (it is substantially faster on the large coefficient
sizes that show up in high symmetric powers); ``fractions.Fraction`` is the
drop-in fallback.  Both are always reduced with a positive denominator.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q  # type: ignore[assignment]

QLike = object  # ints, Q and "p/q" strings are accepted where documented

ZERO = Q(0)
ONE = Q(1)


def qq(value) -> Q:
    """Coerce an int, string "p/q" or rational to Q."""
    if isinstance(value, str):
        if "/" in value:
            num, den = value.split("/", 1)
            return Q(int(num), int(den))
        return Q(int(value))
    return Q(value)


def qstr(value) -> str:
    """Render a rational as "p" or "p/q" (exact, deterministic)."""
    q = qq(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def lcm_int(a: int, b: int) -> int:
    import math

    return abs(a // math.gcd(a, b) * b) if a and b else 0


def lcd(values) -> int:
    """Least common denominator of an iterable of rationals."""
    out = 1
    for v in values:
        out = lcm_int(out, int(qq(v).denominator))
    return out if out else 1
