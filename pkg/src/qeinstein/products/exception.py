class ParameterException(Exception):
    """Raised when m is zero or a factor description is inconsistent."""


class NoSolutionException(Exception):
    """Raised when an explicit solution is requested where none exists."""
