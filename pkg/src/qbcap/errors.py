"""Exception types shared across the package."""


class InvalidStateError(ValueError):
    """Raised when a matrix or parameter set fails density-matrix validation."""


class NumericError(ArithmeticError):
    """Raised when a numerical guarantee is violated beyond round-off."""


class UndefinedAverageError(ValueError):
    """Raised when the unweighted branch average would divide by a vanishing probability."""
