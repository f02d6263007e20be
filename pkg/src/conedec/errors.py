"""Shared exception types."""


class BoundExceeded(RuntimeError):
    """An operation would exceed its configured size/enumeration cap."""


class NumericalFailure(RuntimeError):
    """An internal solver reached a state that should be impossible."""
