"""Exception types raised by the library.

All of them derive from :class:`ZkError`, itself a ``ValueError``, so callers
that only care about "bad input" can catch one thing.
"""


class ZkError(ValueError):
    pass


class CapExceeded(ZkError):
    """An enumeration would exceed the configured element cap."""


class NotASubgroup(ZkError):
    pass


class MixedModulus(ZkError):
    """Codes combined in one enumerator disagree on k or n."""


class NonIntegralResult(ZkError):
    """A transformed enumerator has a coefficient that is not a nonnegative integer."""


class NonRationalResult(ZkError):
    """A cyclotomic coefficient failed to reduce to a rational integer."""


class DomainError(ZkError):
    pass


class NonPositive(DomainError):
    pass


class WrongModulus(ZkError):
    pass


class IndexOutOfRange(ZkError):
    pass
