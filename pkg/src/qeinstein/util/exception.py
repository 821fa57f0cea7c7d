class MissingConfigValueException(Exception):
    """Raised when a required config section or value is not set."""


class UsageException(Exception):
    """Raised when the command line arguments are malformed."""
