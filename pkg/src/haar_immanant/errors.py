"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds the supported desk-scale sizes."""


class NoPathError(ValueError):
    """Raised when two partitions are not comparable in dominance order."""
