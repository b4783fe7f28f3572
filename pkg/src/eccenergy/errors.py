"""Exception hierarchy shared by the library and the CLI."""


class EccError(Exception):
    """Base class for every error raised by :mod:`eccenergy`."""


class Graph6Error(EccError, ValueError):
    """Malformed graph6 text. ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GraphValidationError(EccError, ValueError):
    """Edge list violates the simple-graph invariants."""


class DomainError(EccError, ValueError):
    """Argument outside the domain an operation is defined on."""


class DisconnectedGraphError(EccError):
    """Distance-based construction attempted on a disconnected graph."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertex {v} is unreachable from vertex {u}")
        self.pair = (u, v)


class ConvergenceError(EccError, ArithmeticError):
    """Iterative numerical routine failed to reach its tolerance."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class VerificationError(EccError, AssertionError):
    """A proven closed-form statement failed numerically."""
