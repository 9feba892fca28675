"""Genus bookkeeping for the solution curve of a Fuchsian operator.

The exposed ramification quantity follows the examples' sign convention
sum over singular places of deg(p) * (1 - 1/e(L,p)); apparent singularities
have e = 1 and contribute nothing.  The covering degree M (order of the
projective Galois group) is always caller-supplied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import delta_total, exponent_reports, singular_places
from .operators import LinearODE
from .qnum import Q, ZERO, qq
from .transform import RationalMap, pullback


@dataclass(frozen=True)
class GenusReport:
    hurwitz_sum: object  # sum of deg(p) * (1 - 1/e) over singular places
    genus: object  # rational; integer exactly when the inputs are consistent
    per_place: tuple  # (Place, e, contribution) triples


def hurwitz_sum(L: LinearODE, extra_places=None):
    """Sum of deg(p)*(1 - 1/e(L,p)) over all singular places of L.

    extra_places may add places to the sum; ordinary ones have e = 1 and
    contribute 0, so the value only stabilizes upward on genuine ramification.
    """
    return _hurwitz(L, extra_places)[0]


def _hurwitz(L: LinearODE, extra_places=None):
    places = None
    if extra_places is not None:
        singular = singular_places(L)
        seen = set(singular)
        places = singular + [p for p in extra_places if p not in seen]
    total = ZERO
    per_place = []
    for rep in exponent_reports(L, places):
        contribution = rep.place.degree * (1 - Q(1, rep.ram_index))
        per_place.append((rep.place, rep.ram_index, qq(contribution)))
        total += contribution
    return qq(total), tuple(per_place)


def genus_from_cover(hurwitz, M: int, g0: int = 0):
    """Genus of the covering curve: g = 1 + (M/2)(hurwitz + 2(g0 - 1))."""
    return qq(1 + Q(M, 2) * (qq(hurwitz) + 2 * (g0 - 1)))


def genus_report(L: LinearODE, M: int, g0: int = 0) -> GenusReport:
    total, per_place = _hurwitz(L)
    return GenusReport(
        hurwitz_sum=total,
        genus=genus_from_cover(total, M, g0),
        per_place=per_place,
    )


def pullback_delta_identity(L0: LinearODE, f):
    """The Appendix Lemma's Delta identity for genus-0 covers of the line:
    M*(Delta(L0)/(n-1) + 2) = Delta(pullback(L0,f))/(n-1) + 2.

    Returns (lhs, rhs, ok).
    """
    if not isinstance(f, RationalMap):
        f = RationalMap(f)
    n = L0.order
    lhs = f.degree * (delta_total(L0) / (n - 1) + 2)
    rhs = delta_total(pullback(L0, f)) / (n - 1) + 2
    return qq(lhs), qq(rhs), lhs == rhs
