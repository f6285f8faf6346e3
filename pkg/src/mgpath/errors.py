"""Exception types shared by all pricers."""


class DomainError(ValueError):
    """A parameter violates its domain constraint (names the offending field)."""


class NumericalError(ArithmeticError):
    """A computation left the representable range (overflowing weight, exploding variance)."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach its tolerance within the node budget."""
