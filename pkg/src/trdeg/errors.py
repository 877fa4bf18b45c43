"""Exception types shared across the package."""


class TrdegError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TrdegError):
    """Raised on malformed polynomial or ring text; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedConfigError(TrdegError):
    """Raised when a (coefficient ring, algebra) pair is outside the supported table."""


class ResourceCapExceeded(TrdegError):
    """Raised when a search would enumerate more candidates than the configured cap.

    Distinct from a negative search result: the bounded question was not decided.
    """


class InternalInconsistencyError(TrdegError):
    """A state the underlying mathematics rules out was reached; indicates a bug."""
