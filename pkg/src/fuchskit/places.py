"""Places of the projective line over Q.

A finite place is a monic squarefree polynomial q; its residue field is
Q[x]/(q) and it stands for the deg(q) Galois-conjugate complex points at the
roots of q.  Degree-1 places expose their rational root.  The point at
infinity is its own place of degree 1.
"""

from __future__ import annotations

from functools import total_ordering

from .poly import Polynomial
from .qnum import qq, qstr


@total_ordering
class Place:
    __slots__ = ("min_poly",)

    def __init__(self, min_poly: Polynomial | None):
        # None encodes the point at infinity
        if min_poly is not None:
            if not min_poly.is_monic() or min_poly.degree < 1:
                raise ValueError("finite place needs a monic polynomial of degree >= 1")
        self.min_poly = min_poly

    @staticmethod
    def infinity() -> "Place":
        return Place(None)

    @staticmethod
    def finite(min_poly: Polynomial) -> "Place":
        return Place(min_poly.monic())

    @staticmethod
    def rational(point) -> "Place":
        point = qq(point)
        return Place(Polynomial([-point, 1]))

    @property
    def is_infinity(self) -> bool:
        return self.min_poly is None

    @property
    def degree(self) -> int:
        return 1 if self.min_poly is None else self.min_poly.degree

    @property
    def root(self):
        """Rational root for a degree-1 finite place."""
        if self.min_poly is None or self.min_poly.degree != 1:
            raise ValueError(f"{self} has no rational root")
        return -self.min_poly.coefficient(0)

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def _sort_key(self):
        # rational points ascending, then algebraic places by (degree,
        # coefficients), infinity last
        if self.min_poly is None:
            return (2, 0, ())
        if self.min_poly.degree == 1:
            return (0, self.root, ())
        return (1, self.min_poly.degree, self.min_poly.coeffs)

    def __lt__(self, other):
        return self._sort_key() < other._sort_key()

    def __repr__(self):
        return f"Place({self})"

    def __str__(self):
        if self.min_poly is None:
            return "infinity"
        if self.min_poly.degree == 1:
            return f"x={qstr(self.root)}"
        return f"root of {self.min_poly}"
