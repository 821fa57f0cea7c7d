"""Lie algebra exceptions."""


class InvalidSignPatternException(Exception):
    """Raised when bracket eigenvalue signs do not match the group tag."""


class NotUnimodularException(Exception):
    """Raised when a signed triple is not a unimodular 3D bracket triple."""


class JacobiIdentityException(Exception):
    """Raised when structure constants violate antisymmetry or Jacobi."""
