class NullkitError(Exception):
    """Base class for all library errors."""


class DomainError(NullkitError, ValueError):
    """A precondition of an operation is violated by its input."""


class RingMismatch(DomainError):
    def __init__(self, msg: str = "ring mismatch"):
        super().__init__(msg)


class SizeGuardError(DomainError):
    """An exhaustive scan would exceed the configured size limit."""


class TheoremViolated(NullkitError, AssertionError):
    """An exhaustive oracle contradicted a theorem. Must never happen."""
