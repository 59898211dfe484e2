"""Exceptions shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal structural invariant failed; results cannot be trusted.

    Raised when a quantity that the construction guarantees (orbit sizes,
    coefficient bounds, cardinalities, ...) comes out wrong.  This always
    indicates a bug or a corrupted input, never a legitimate data case.
    """
