"""Exception hierarchy shared by every module."""


class JetcoverError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(JetcoverError, ValueError):
    """Malformed combinatorial data (duplicate labels, edges outside the vertex set, ...)."""


class DomainError(JetcoverError, ValueError):
    """An operation was called outside its mathematical domain."""


class OrderTooSmallError(DomainError):
    """A monomial exponent exceeds what the requested jet order can polarize."""


class ResourceLimitError(JetcoverError):
    """A computation would exceed a configured size bound and was refused."""


class ConsistencyError(JetcoverError, AssertionError):
    """Two independent computations of the same object disagreed."""
