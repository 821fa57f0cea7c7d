class FrameException(Exception):
    """Raised when a tensor is not diagonal in the frame it is read in."""
