"""Exception hierarchy shared by every module.

Every error derives from :class:`FinCondError` so callers (notably the CLI)
can catch library failures in one place without swallowing programming bugs.
"""


class FinCondError(Exception):
    """Base class for all library errors."""


class DuplicateExponent(FinCondError, ValueError):
    pass


class InvalidCNF(FinCondError, ValueError):
    pass


class ZeroHasNoDegree(FinCondError, ValueError):
    pass


class ZeroArgument(FinCondError, ValueError):
    pass


class NotALimit(FinCondError, ValueError):
    pass


class PreconditionViolated(FinCondError, ValueError):
    pass


class OutOfSubset(FinCondError, ValueError):
    pass


class NotWellOrdered(FinCondError, ValueError):
    pass


class UnsupportedTerm(FinCondError, ValueError):
    pass


class IdentityViolation(FinCondError, AssertionError):
    """A closed form disagreed with the generic computation it must match."""
