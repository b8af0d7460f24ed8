"""Exception types shared across the package."""


class CycleError(ValueError):
    """The supplied relation is not a strict order (a cycle or self-loop)."""


class SizeError(ValueError):
    """An exhaustive operation was asked to run beyond its size cap."""


class DuplicateVariableError(ValueError):
    """An expression uses the same variable more than once."""


class PlacementError(ValueError):
    """A diagram placement violates the half-quadrant constraints."""


class ConservationViolation(AssertionError):
    """The exact product identity failed; indicates an implementation bug."""


class ProgramError(RuntimeError):
    """A compare/swap program touched an out-of-range position."""


class MalformedHistory(ValueError):
    """History pairs whose origin indices do not form a permutation."""


class NotASorter(RuntimeError):
    """A program registered as a sorter produced an unsorted output."""
