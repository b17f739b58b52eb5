"""Exception types shared by all modules."""


class RootLocError(Exception):
    """Base class for library errors."""


class ParseError(RootLocError):
    pass


class PreconditionError(RootLocError):
    """A documented precondition of an operation was violated."""


class BothZero(PreconditionError):
    pass


class ZeroDenominator(PreconditionError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class DegreeOrder(PreconditionError):
    pass


class InsufficientPrefix(PreconditionError):
    pass


class InsufficientData(PreconditionError):
    pass


class SingularMinor(PreconditionError):
    pass


class NotRFunction(PreconditionError):
    pass


class NotRealRooted(PreconditionError):
    pass


class ConsistencyError(RootLocError):
    """Two independent exact routes disagreed. Indicates a bug."""
