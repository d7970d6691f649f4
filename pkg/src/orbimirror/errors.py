"""Shared exception types."""


class InternalConsistencyError(Exception):
    """An exact identity that must hold by construction failed.

    Raised, e.g., when a cup-product exponent fails to be a nonnegative
    integer or when the mirror index map is not a bijection.  Indicates a
    bug, not a property of the input.
    """
