"""Exception types shared across the package."""


class LimitError(RuntimeError):
    """Raised when an enumeration is asked to exceed its configured size limit."""
