class ParameterException(Exception):
    """Raised when m is zero or a Riccati input is malformed."""


class NoGlobalSolutionException(Exception):
    """Raised when a branch without a global solution is evaluated."""
