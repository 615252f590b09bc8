"""Exception types shared across the package."""


class DalphaError(Exception):
    """Base class for all package-specific errors."""


class GraphInputError(DalphaError, ValueError):
    """Malformed graph construction input (bad endpoints, loops, bad order)."""


class NotConnectedError(DalphaError, ValueError):
    """A connected graph was required."""


class Graph6Error(DalphaError, ValueError):
    """Malformed graph6 text. Carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class AlphaDomainError(DalphaError, ValueError):
    """alpha outside the half-open interval [0, 1)."""


class ConvergenceError(DalphaError, RuntimeError):
    """Iterative eigensolver failed to reach tolerance. Carries last residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (last residual {residual:.3e})")
        self.residual = residual


class TransformError(DalphaError, ValueError):
    """A graft transformation's structural hypothesis is violated.

    The message names the failed condition.
    """


class LimitError(DalphaError, ValueError):
    """Input exceeds a configured enumeration/canonicalization cap."""


class ConfigError(DalphaError, ValueError):
    """Invalid run configuration (empty alpha grid, bad ranges, ...)."""
