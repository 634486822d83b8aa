"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the function."""


class DegenerateInputError(ValueError):
    """The requested quantity is 0/0 (or otherwise undefined) at this input."""


class TruncationLeakageError(RuntimeError):
    """Amplitude pushed past the Fock cutoff exceeded the allowed tolerance."""


class MismatchError(ValueError):
    """Two Fock vectors live in different spaces (lambda or cutoff differ)."""


class ConsistencyError(ArithmeticError):
    """A computed value violates a bound that holds mathematically."""


class QuadratureError(RuntimeError):
    """Gauss quadrature failed to converge."""
