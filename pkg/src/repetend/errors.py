class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class FactorizationTimeout(DomainError):
    pass


class SearchExhausted(DomainError):
    pass


class ExpansionBoundExceeded(DomainError):
    pass


class KeyFormatError(DomainError):
    """A key descriptor file could not be parsed."""


class KeyValidationError(DomainError):
    """A key descriptor parsed but violates a key invariant."""
