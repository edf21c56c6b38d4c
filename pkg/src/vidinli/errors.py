"""Exception hierarchy shared by every module."""


class VidinliError(Exception):
    pass


class InputError(VidinliError, ValueError):
    """Bad user input: shapes, fields, malformed files, failed preconditions."""


class NotVidinli(InputError):
    """Raised when an algebra fails a recognition test; ``reason`` is a short code."""

    def __init__(self, reason, detail=""):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)


class BoundExceeded(InputError):
    """An exhaustive search would exceed its configured size bound."""

    def __init__(self, what, size, bound, flag=None):
        self.size = size
        self.bound = bound
        msg = f"{what}: search size {size} exceeds bound {bound}"
        if flag:
            msg += f" (raise it with {flag})"
        super().__init__(msg)


class PropertyViolation(VidinliError, AssertionError):
    """A structural identity that must hold on every instance failed.

    Never expected in practice; it signals an implementation bug.
    """
