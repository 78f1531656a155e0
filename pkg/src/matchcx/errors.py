class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's precondition."""
