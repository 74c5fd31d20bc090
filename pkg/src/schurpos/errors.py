"""Shared exception type for invalid domain inputs."""


class DomainError(ValueError):
    """Raised when an argument violates a documented precondition."""
