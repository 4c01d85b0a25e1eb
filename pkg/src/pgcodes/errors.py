"""Exception types shared across the package."""


class PGCodesError(Exception):
    """Base class for all package errors."""


class CompositeP(PGCodesError):
    """Characteristic is not prime."""


class ReducibleModulus(PGCodesError):
    """Extension modulus is not irreducible over the prime field."""


class UnsupportedSize(PGCodesError):
    """No built-in modulus for this field order and none was supplied."""


class DivisionByZero(PGCodesError):
    """Division or inversion of a zero field element."""


class FieldMismatch(PGCodesError):
    """Operands belong to different fields."""


class NotPrimePower(PGCodesError):
    """q is not of the form p**h with p prime."""


class DimensionError(PGCodesError):
    """Flat or vector dimensions violate an operation precondition."""


class DimensionMismatch(PGCodesError):
    """Codewords live in different ambient spaces."""


class SingularMatrix(PGCodesError):
    """Collineation matrix is not invertible."""


class NotAPlaneCodeword(PGCodesError):
    """Vector length does not match the point count of PG(2,q)."""


class NotOddPrime(PGCodesError):
    """Construction requires an odd prime characteristic."""


class FlatsNotDisjoint(PGCodesError):
    """Cone vertex and base plane intersect."""


class SpanDeficient(PGCodesError):
    """Cone vertex and base plane do not span the ambient space."""


class NotACodeword(PGCodesError):
    """Input vector is not in the hyperplane code."""


class WeightOutOfRange(PGCodesError):
    """Codeword weight violates the hypothesis of the requested operation."""


class NoRepresentation(PGCodesError):
    """No representation of the requested shape exists; within the theorem's
    weight range this would contradict the two-hyperplane theorem."""


class DecompositionFailed(PGCodesError):
    """Vertex recovery failed on an in-range codeword; candidate counterexample.

    Carries a diagnostics dict so callers can dump the offending input.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class BudgetExceeded(PGCodesError):
    """Exhaustive enumeration would exceed the configured budget."""


class BranchNotApplicable(PGCodesError):
    """The inequality replay has no branch covering this (q, n)."""


class ParseError(PGCodesError):
    """Malformed codeword or flat file."""
