"""Shared exception types."""


class TrivalentError(Exception):
    """Base class for errors raised by this package."""


class ParseError(TrivalentError, ValueError):
    """Malformed formula or inference text.

    Carries the zero-based character position where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MissingAtomError(TrivalentError, KeyError):
    """A valuation was queried for an atom outside its declared atom set."""

    def __init__(self, atom: str):
        super().__init__(atom)
        self.atom = atom

    def __str__(self) -> str:
        return f"valuation does not cover atom {self.atom!r}"


class ResourceLimitError(TrivalentError, RuntimeError):
    """An enumeration would exceed its configured size cap."""
