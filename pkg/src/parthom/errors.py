"""Shared exception types."""


class FeasibilityError(RuntimeError):
    """A request exceeds the documented size bounds; refuse rather than thrash."""


class ModuleCheckError(RuntimeError):
    """A quantity that must be a genuine module (nonnegative integer
    multiplicities) failed that check, or two independent computations of the
    same module disagreed."""


class ConcentrationError(RuntimeError):
    """Homology is not free and concentrated in a single degree, so the
    Lefschetz shortcut for reading off its character is invalid."""
