"""Exception hierarchy for the fuchskit package."""


class FuchskitError(Exception):
    """Base class for all domain errors raised by fuchskit."""


class ZeroPolynomial(FuchskitError):
    """An operation that requires a nonzero polynomial received zero."""


class ZeroFunction(FuchskitError):
    """An operation that requires a nonzero rational function received zero."""


class DivisionByZeroFunction(FuchskitError):
    """A rational function with identically-zero denominator was constructed."""


class ResidueZeroDivision(FuchskitError):
    """Attempted to invert the zero class in a residue ring."""


class PlaceSplit(FuchskitError):
    """A residue computation discovered that the place's modulus factors.

    Carries the nontrivial factorization so callers can re-dispatch the
    computation on each factor separately (dynamic evaluation).
    """

    def __init__(self, factors):
        self.factors = tuple(factors)
        super().__init__(
            "modulus splits into factors: "
            + ", ".join(str(f) for f in self.factors)
        )


class NotFuchsian(FuchskitError):
    """The operator has at least one irregular singular point."""


class NotFuchsianAt(NotFuchsian):
    """The operator fails the regular-singularity bound at the given place."""

    def __init__(self, place):
        self.place = place
        super().__init__(f"operator is not Fuchsian at {place}")


class NonRationalExponent(FuchskitError):
    """Fewer than n rational indicial roots exist at the given place."""

    def __init__(self, place):
        self.place = place
        super().__init__(f"non-rational exponent at {place}")


class OrderMismatch(FuchskitError):
    """Two operators that must share an order do not."""


class DegenerateMap(FuchskitError):
    """A rational map that must be non-constant is constant."""


class NotInReducedForm(FuchskitError):
    """Expected an operator of the shape y'' - f*y = 0 (no y' term)."""


class ZeroPotential(FuchskitError):
    """The potential f in y'' - f*y = 0 is identically zero."""


class UnknownGroup(FuchskitError):
    """Unrecognized projective group tag."""


class EmptyBasis(FuchskitError):
    """A line-bundle degree was requested for an empty basis."""


class NoInvariants(FuchskitError):
    """A symmetric power has no nonzero rational solutions at this degree."""


class UnknownKey(FuchskitError):
    """Unknown equation catalog key."""


class ExpressionSyntaxError(FuchskitError):
    """Input text does not conform to the expression grammar."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")
