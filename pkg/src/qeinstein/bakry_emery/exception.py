from typing import Any


class ParameterException(Exception):
    """Raised when m is zero or an input does not match its structure
    constants."""


class PreconditionException(Exception):
    """Raised when the hypothesis of an identity check fails.

    Attributes:
        residual (`Any`): The size of the violation.
    """

    def __init__(self, message: str, residual: Any = None):
        super().__init__(message)
        self.residual = residual
