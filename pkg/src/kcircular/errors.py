class KCircularError(Exception):
    """Base class for errors raised by this package."""


class EnumerationLimitError(KCircularError):
    """An exhaustive enumeration would exceed the configured size limit."""


class HypothesisError(KCircularError, ValueError):
    """A theorem-backed predicate was called outside the theorem's hypotheses."""
