"""Exception hierarchy shared across the package."""


class VQLError(Exception):
    """Base class for all errors raised by vqlnet."""


class InputError(VQLError, ValueError):
    """A caller passed an out-of-range ID, bad parameter or malformed request."""


class DomainError(VQLError, ValueError):
    """An operation was applied outside the domain where it is defined."""


class StructuralError(VQLError, RuntimeError):
    """A graph or label violates a structural invariant."""


class ResourceError(VQLError, RuntimeError):
    """A required VQL is not entangled."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge


class ScheduleError(VQLError, RuntimeError):
    """A step plan was rejected by the entanglement ledger."""
