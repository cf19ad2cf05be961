"""Exception types shared across the package."""


class InputError(ValueError):
    """A precondition on user-supplied data does not hold."""


class AuditFailure(AssertionError):
    """An internal consistency check failed.

    Raised when a computed object violates an identity it is known to
    satisfy, e.g. a commutation exponent disagrees with its closed form.
    This always signals a bug, never bad input.
    """


class GuardExceeded(InputError):
    """An exhaustive computation was refused because the input is too large."""
