"""Exception types shared across the toolkit."""


class GoodTracesError(Exception):
    pass


class UnknownSymbol(GoodTracesError):
    pass


class NonPolynomial(GoodTracesError):
    """Raised when an expression requires division by a non-rational."""


class BudgetExceeded(GoodTracesError):
    """Sign refinement hit its precision budget.

    Carries the last enclosure so callers can report an honest Unknown
    instead of guessing a sign.
    """

    def __init__(self, enclosure, message="precision budget exceeded"):
        super().__init__(message)
        self.enclosure = enclosure


class OracleExhausted(BudgetExceeded):
    """A digit-stream oracle ran out of supplied digits."""


class NotDenseError(GoodTracesError):
    pass


class CyclicFactor(GoodTracesError):
    pass


class IncompatibleDomains(GoodTracesError):
    pass


class KernelMeetsCone(GoodTracesError):
    """A quotient precondition failed: the kernel contains a positive element."""

    def __init__(self, witness, message="kernel meets the positive cone"):
        super().__init__(message)
        self.witness = witness


class RootNotInBox(GoodTracesError):
    pass


class InconsistentRelation(GoodTracesError):
    pass


class NotIrreducible(GoodTracesError):
    pass


class NotInDomain(GoodTracesError):
    pass


class DepthMismatch(GoodTracesError):
    pass


class InvalidPath(GoodTracesError):
    pass


class UnsupportedRule(GoodTracesError):
    pass


class SchemaError(GoodTracesError):
    """Input document violation; carries field diagnostics."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class UnknownExample(GoodTracesError):
    pass
