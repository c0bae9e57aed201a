"""Exception types shared across geomlab."""


class InputError(ValueError):
    """An argument violates a documented precondition."""


class DegenerateDirectionError(InputError):
    """A zero vector was given where a direction is required."""


class UnsupportedDimensionError(InputError):
    """The operation is only defined for a particular ambient dimension."""


class InfeasibleError(RuntimeError):
    """No candidate pair satisfied the search constraint."""
