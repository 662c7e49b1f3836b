"""Exception hierarchy."""
from __future__ import annotations


class GrsSubError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(GrsSubError, ValueError):
    """Invalid field parameters (size, primality, defining polynomial)."""


class ReducibleError(FieldError):
    """A defining polynomial has a nontrivial factor."""

    def __init__(self, poly, factor):
        self.poly = list(poly)
        self.factor = list(factor)
        super().__init__(f"polynomial {self.poly} is reducible: divisible by {self.factor}")


class OrderError(GrsSubError, ValueError):
    """Requested multiplicative order does not exist in the field."""


class CodeError(GrsSubError, ValueError):
    """Invalid code parameters (dimensions, locators, multipliers)."""


class DimensionError(CodeError):
    pass


class UnsupportedStructureError(GrsSubError, TypeError):
    """Operation requires structure the code does not have (e.g. cyclic)."""


class InvariantError(GrsSubError, AssertionError):
    """An internal consistency check failed; indicates a bug, never bad input."""


class SelectionError(GrsSubError, ValueError):
    """A row selection violates the nested-subcode admissibility rules."""


class EnumerationLimitError(GrsSubError):
    """Exhaustive enumeration would exceed the configured limit."""

    def __init__(self, needed, limit, what=None):
        self.needed = needed
        self.limit = limit
        super().__init__(f"enumeration needs {what or needed} messages, limit is {limit}")


class SpecError(GrsSubError, ValueError):
    """Malformed job specification file."""
