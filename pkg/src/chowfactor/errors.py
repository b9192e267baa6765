"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """The requested computation exceeds the configured size ceiling."""


class ConsistencyError(RuntimeError):
    """Two independent derivations of the same quantity disagree."""
