"""Exception hierarchy shared across ringlab."""

from __future__ import annotations


class RingError(Exception):
    """Base class for all ringlab errors."""


class SizeCapError(RingError):
    """A construction would exceed the configured element-count cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} would have {size} elements, above the cap of {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NotAnIdealError(RingError, ValueError):
    """A subset that must be a two-sided ideal is not one."""


class InvalidStructureError(RingError, ValueError):
    """Input tables, maps or parameters violate the required algebraic laws."""


class InternalInconsistencyError(RingError, AssertionError):
    """Two independent computation routes disagreed."""


class UnknownCheckError(RingError, KeyError):
    """A theorem-check id is not registered."""
