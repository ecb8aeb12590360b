"""Exception hierarchy shared by all modules."""


class DyckTriError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRangeError(DyckTriError, IndexError):
    pass


class DomainError(DyckTriError, ValueError):
    pass


class FlipNotSupportedError(DyckTriError):
    """The triangulation does not contain one side of the requested circuit."""


class NotATriangulationError(DyckTriError):
    """Raised when a collection of simplices cannot come from a triangulation.

    ``witnesses`` holds the offending objects (for example two distinct
    matchings on one support).
    """

    def __init__(self, message, *witnesses):
        super().__init__(message)
        self.witnesses = witnesses


class AxiomError(DyckTriError):
    """A matching ensemble failed the axiom check; ``report`` has details."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class IncompatibleSkeletonError(DyckTriError):
    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class SchemaError(DyckTriError, ValueError):
    """Malformed JSON document; the message carries the offending location."""
