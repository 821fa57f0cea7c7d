class UnknownGroupException(Exception):
    """Raised when a geometry is not handled by the Lie group solver."""


class SolutionCheckException(Exception):
    """Raised when a solution produced by the case split fails its residual
    or support check."""
