"""Exception hierarchy shared by every module in the package."""


class DualtestError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DualtestError, ValueError):
    """An input value lies outside the mathematical domain of an operation."""


class ContractError(DualtestError, ValueError):
    """A call violates an API contract (mismatched sizes, empty or zero-length inputs)."""
