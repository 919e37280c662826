"""Exception types raised by pqfib operations."""


class PqfibError(Exception):
    """Base class for every pqfib error."""


class ParameterError(PqfibError, ValueError):
    """Invalid deformation parameters or a violated precondition."""


class DomainError(PqfibError, ValueError):
    """An evaluation left its domain (vanishing denominator, x = 0, ...)."""


class ConvergenceError(PqfibError, ArithmeticError):
    """A numeric series did not settle within max_terms terms."""


class UsageError(PqfibError, ValueError):
    """Malformed command-line input."""
