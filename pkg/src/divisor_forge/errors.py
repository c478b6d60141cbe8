"""Exception hierarchy for divisor_forge."""


class DivisorForgeError(Exception):
    """Base class for all library errors."""


class RingMismatch(DivisorForgeError):
    """Operands belong to different rings."""


class HeightNotOne(DivisorForgeError):
    """An ideal expected to be a height-one prime has the wrong height."""


class PrimalityUncertain(DivisorForgeError):
    """The primality certificate failed and the caller did not assert primality."""


class DecompositionIncomplete(DivisorForgeError):
    """The splitting procedure could neither split nor certify a component.

    Raised instead of ever returning a possibly-wrong decomposition.
    """


class NonIntegralCoercion(DivisorForgeError):
    """Attempted to coerce a divisor with non-integer coefficients to integer tier."""


class NoSolution(DivisorForgeError):
    """The linear diophantine system for the requested multidegree has no solution."""


class NotCompleteIntersection(DivisorForgeError):
    """The defining ideal is not generated by a regular sequence."""


class GradingNotPositive(DivisorForgeError):
    """Graded operation requested on a ring whose grading is not positive."""


class FactorDegreeExceeded(DivisorForgeError):
    """Multivariate factorization refused: substituted degree above the cap."""


class ScriptError(DivisorForgeError):
    """Error while parsing or executing a script; carries a source location."""

    def __init__(self, message, line=None, column=None, excerpt=None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.excerpt = excerpt

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            base = "%d:%d: %s" % (self.line, self.column, base)
        if self.excerpt:
            base += "\n" + self.excerpt
        return base


class ParseError(ScriptError):
    """Syntax error in a script or polynomial expression."""
