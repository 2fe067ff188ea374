"""Exception types shared across the package.

Three failure families, kept distinct because the CLI maps them to
different exit codes:

* DomainError: the caller violated a documented precondition (bad degree,
  unparsable input, a rank outside the supported range).
* ResourceBudgetError: the requested computation would exceed its element
  budget; carries the estimated cost so callers can report it.
* ConsistencyError: an internal cross-check failed.  This is never user
  error; it signals a bug in the engine itself.
"""

from __future__ import annotations


class HeckestabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HeckestabError, ValueError):
    """A documented precondition was violated by the caller."""


class ResourceBudgetError(HeckestabError, RuntimeError):
    """A computation refused to start or continue because it would exceed
    the configured element budget."""

    def __init__(self, message: str, *, cost: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.cost = cost
        self.budget = budget


class ConsistencyError(HeckestabError, RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
