"""Exception hierarchy.

``GuardTripped`` and its subclasses signal that a bounded computation hit a
resource limit; the CLI maps them to exit code 3.
"""


class NewtmodError(Exception):
    """Base class for all newtmod errors."""


class ParseError(NewtmodError, ValueError):
    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class AlgebraMismatch(NewtmodError, ValueError):
    pass


class DimensionMismatch(NewtmodError, ValueError):
    pass


class NotArrowStable(NewtmodError, ValueError):
    pass


class EmptyInput(NewtmodError, ValueError):
    pass


class PostconditionFailed(NewtmodError, AssertionError):
    pass


class GuardTripped(NewtmodError):
    """A resource guard stopped the computation."""


class NotFiniteDimensional(GuardTripped):
    pass


class TooLarge(GuardTripped):
    pass


class EndTooLarge(TooLarge):
    pass


class SearchSpaceTooLarge(TooLarge):
    def __init__(self, message, dims=None):
        self.dims = dims
        super().__init__(message)
