class PreconditionError(ValueError):
    """An operation was called outside its documented precondition."""


class InvariantError(AssertionError):
    """An internal invariant or proven bound failed at runtime."""
