"""Exception types shared across the package."""

from __future__ import annotations


class Lrc4Error(Exception):
    """Base class for all package-specific errors."""


class RankError(Lrc4Error):
    """A matrix that must have full row rank does not."""


class EmptyCodeError(Lrc4Error):
    """An operation would produce a code with no coordinates or no codewords."""


class UndefinedDistanceError(Lrc4Error):
    """Minimum distance requested for a dimension-0 code."""


class ResourceError(Lrc4Error):
    """An exact computation exceeds the desk-scale guard."""


class ScanBudgetExceeded(ResourceError):
    """The column-subset scan hit its budget before settling the distance.

    ``lower_bound`` is the largest t with all (t-1)-subsets verified
    independent, i.e. the scan established d >= lower_bound.
    """

    def __init__(self, lower_bound: int, budget: int):
        super().__init__(f"column scan budget {budget} exceeded; established d >= {lower_bound}")
        self.lower_bound = lower_bound
        self.budget = budget


class RangeError(Lrc4Error):
    """Construction parameters outside the family's admissible range."""


class CatalogError(Lrc4Error):
    """Unknown family or construction identifier."""


class StructureError(Lrc4Error):
    """A parity-check group layout violates the covering conditions."""
