"""Exception types raised across the package."""


class SchurOpsError(Exception):
    pass


class InvalidIndex(SchurOpsError, ValueError):
    pass


class ParseError(SchurOpsError, ValueError):
    """Malformed word, partition or trace text.

    ``position`` is the 0-based token index when the failure is tied to a token.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ParameterError(SchurOpsError, ValueError):
    pass


class DomainError(SchurOpsError, ValueError):
    pass


class StepMismatch(SchurOpsError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class TraceError(SchurOpsError):
    """A certificate failed verification; ``index`` is the failing step (or None)."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
