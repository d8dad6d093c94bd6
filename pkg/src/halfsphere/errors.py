"""Shared exception types."""

from __future__ import annotations


class HalfsphereError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(HalfsphereError):
    """A point or polynomial does not live in the expected number of coordinates."""


class PreconditionError(HalfsphereError):
    """An operation was invoked outside its mathematical domain."""


class ParseError(HalfsphereError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedAlphabetError(ParseError):
    """v-generators and p-generators cannot appear in one expression."""
