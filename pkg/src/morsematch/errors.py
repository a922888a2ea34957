"""Exception types shared across the package."""


class MorsematchError(Exception):
    """Base class for all library errors."""


class DuplicateValue(MorsematchError):
    """Two vertices carry the same valuation; the vertex function must be injective."""


class EmptySimplex(MorsematchError):
    """A simplex needs at least one vertex."""


class UnknownVertex(MorsematchError):
    """A simplex references a vertex with no valuation entry."""


class NotInComplex(MorsematchError):
    """The queried cell is not part of the complex."""


class IncomparableDepth(MorsematchError):
    """Values of different nesting depth cannot be ordered against each other."""


class AdjacentTie(MorsematchError):
    """Two edges sharing a vertex have equal weight; the greedy output would not be a matching."""


class BudgetExceeded(MorsematchError):
    """An exhaustive search exceeded its configured budget."""


class CycleDetected(MorsematchError):
    """A closed non-trivial path showed up where the field should be acyclic."""


class NotSmooth(MorsematchError):
    """The complex fails the smoothness test required by the fast matcher."""


class NotCollapsible(MorsematchError):
    """The computed matching does not certify a collapse to a single vertex."""


class InvalidInput(MorsematchError):
    """Malformed input file or payload."""
