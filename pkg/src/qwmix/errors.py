"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument violates an operation's precondition."""


class SizeLimitError(InvalidArgumentError):
    """A construction would exceed the configured vertex cap."""


class InfeasibleParamsError(InvalidArgumentError):
    """A strongly-regular parameter tuple has no real spectrum."""


class NoMixingError(InvalidArgumentError):
    """Closed-form mixing times were requested for a family/parity without any."""


class NumericFailureError(RuntimeError):
    """An underlying numerical routine failed to converge."""


class StructureViolationError(RuntimeError):
    """A matrix does not have the structure the calling context guarantees."""
