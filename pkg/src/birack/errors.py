"""Exception hierarchy shared by the whole package.

The CLI maps these onto its exit-code contract: bad input or unparsable
files exit 1, failed axiom/verification checks exit 2, and refused
oversized enumerations exit 3.
"""

from __future__ import annotations


class BirackError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BirackError):
    """A caller supplied an out-of-range label, unknown tag, bad size, etc."""


class ParseError(InputError):
    """Malformed text input (braid word or birack file).

    ``position`` is a 0-based character offset into the parsed string,
    ``line`` a 1-based line number for file input; either may be None.
    """

    def __init__(self, message: str, *, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif position is not None:
            where = f" (at position {position})"
        super().__init__(message + where)


class StructureError(BirackError):
    """A structural precondition failed: rows not bijective, pair map not
    invertible, and similar. Carries a human-readable witness."""


class UnsupportedTheoryError(InputError):
    """An operation was asked to work in a knot theory it does not cover."""


class BudgetError(BirackError):
    """An enumeration would exceed its resource budget.

    ``required`` is the budget that would have been needed; ``partial``
    optionally carries results gathered before the refusal.
    """

    def __init__(self, message: str, *, required: int, budget: int, partial=None):
        self.required = required
        self.budget = budget
        self.partial = partial
        super().__init__(message)
