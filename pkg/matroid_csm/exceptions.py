"""Exception hierarchy for the matroid CSM toolkit.

All errors raised on purpose by the package derive from ``MatroidCSMError``,
which is itself a ``ValueError`` so callers that only guard against bad
values keep working. The CLI maps ``SpecParseError`` to exit code 2 and
every other ``MatroidCSMError`` to exit code 3.
"""

from typing import Optional, Tuple


class MatroidCSMError(ValueError):
    """Base class for all toolkit errors."""


class InvalidParametersError(MatroidCSMError):
    """Parameters outside the domain of an operation (e.g. rank > size)."""


class NotAMatroidError(MatroidCSMError):
    """A bases collection violates the matroid axioms.

    Attributes:
        witness: Pair of offending bases (as bitmasks) when the failure is an
            exchange-axiom or cardinality violation, otherwise ``None``.
    """

    def __init__(self, message: str, witness: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.witness = witness


class InvalidFlatError(MatroidCSMError):
    """A subset that was required to be a flat is not closed."""


class InvalidDimensionError(MatroidCSMError):
    """A skeleton, flag or cycle dimension is out of range or mismatched."""


class InvalidOperandsError(MatroidCSMError):
    """Cycles with different ambient spaces or dimensions were combined."""


class GenericVectorExhaustedError(MatroidCSMError):
    """Stable intersection could not find a generic displacement vector."""


class UnsupportedFamilyError(MatroidCSMError):
    """A closed formula was requested outside the family it is valid for."""


class ConsistencyError(MatroidCSMError):
    """Two independent computations of the same quantity disagree."""


class SpecParseError(MatroidCSMError):
    """A matroid spec, bases file or subdivision file could not be parsed."""
