"""Exception types shared across the package."""


class IsekiError(Exception):
    """Base class for all package errors."""


class RangeError(IsekiError):
    """A table is malformed: wrong shape, or an entry out of range."""


class AxiomViolation(IsekiError):
    """A semiring axiom fails; carries the axiom name and a concrete witness.

    `witness` is a tuple of element indices: (a, b) for commutativity,
    (a,) for identity/absorption, (a, b, c) for associativity and
    distributivity.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"axiom {axiom!r} fails at witness {self.witness}")


class InvalidHomomorphism(IsekiError):
    """A map between semirings breaks one of the preservation laws."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"homomorphism law {law!r} fails at {self.witness}")


class SizeLimitExceeded(IsekiError):
    """A construction or search exceeds its hard size bound."""


class EmptyFamily(IsekiError):
    """An ideal-family operation was given no ideals."""


class ImproperIdeal(IsekiError):
    """A proper ideal was required but the whole semiring was supplied."""


class NoMaximalIdeal(IsekiError):
    """No maximal ideal exists (only possible for the trivial semiring)."""


class SpectrumTooLarge(IsekiError):
    """Closed-family generation refused: too many spectrum points."""


class ParseError(IsekiError):
    """A JSON document does not match the expected schema."""


class ContractionFails(IsekiError):
    """The ideal class is not stable under preimage for this homomorphism."""


class NotSurjective(IsekiError):
    """A surjective homomorphism was required."""


class HypothesisUnmet(IsekiError):
    """A theorem hypothesis does not hold for the given instance."""

    def __init__(self, hypothesis, detail=""):
        self.hypothesis = hypothesis
        msg = f"hypothesis not met: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NoUnitDecomposition(IsekiError):
    """Internal inconsistency: 1 = x + y decomposition promised but absent."""
