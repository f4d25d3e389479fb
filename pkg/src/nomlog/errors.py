"""Exception types shared across the package."""

from __future__ import annotations


class NomlogError(Exception):
    """Base class for all library errors."""


class ParseError(NomlogError):
    """Bad surface syntax; offset is a byte position into the input."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class ArityError(NomlogError):
    pass


class UnknownSymbolError(NomlogError):
    pass


class UnboundAtomError(NomlogError):
    pass


class ModelFormatError(NomlogError):
    pass


class DerivationError(NomlogError):
    """A proof tree failed to check; path addresses the offending node."""

    def __init__(self, message: str, path: str = "") -> None:
        self.path = path
        super().__init__(f"{path or 'root'}: {message}")


class SearchBudgetError(NomlogError):
    pass
