"""Exception types raised across the package."""


class Error(Exception):
    """Base class for every twistcodes error."""


class NonPrime(Error, ValueError):
    pass


class ReducibleModulus(Error, ValueError):
    pass


class DegreeMismatch(Error, ValueError):
    pass


class FieldMismatch(Error, ValueError):
    pass


class ZeroTarget(Error, ValueError):
    pass


class ConstantPolynomial(Error, ValueError):
    pass


class NotSquarefree(Error, ValueError):
    pass


class ZeroLambda(Error, ValueError):
    pass


class ExponentOutOfRange(Error, ValueError):
    pass


class CtxMismatch(Error, ValueError):
    pass


class InvolutionUndefined(Error, ValueError):
    pass


class InvalidWitness(Error, ValueError):
    pass


class LengthMismatch(Error, ValueError):
    pass


class NotConstacyclic(Error, ValueError):
    pass


class NotSemisimple(Error, ValueError):
    pass


class NotIdempotent(Error, ValueError):
    pass


class ZeroCode(Error, ValueError):
    pass


class TooManyFactors(Error, ValueError):
    pass


class TableParseError(Error, ValueError):
    pass


class TableMissing(Error, ValueError):
    pass


class BudgetExceeded(Error):
    """Work limit hit before the minimum distance was certified.

    Carries the best bounds established so far: every codeword found has
    weight >= lower, and upper (when not None) is the weight of an actual
    codeword.
    """

    def __init__(self, upper, lower, work):
        self.upper = upper
        self.lower = lower
        self.work = work
        super().__init__(
            f"distance search budget exhausted after {work} encodings "
            f"(bounds: {lower} <= d <= {upper if upper is not None else '?'})"
        )
