"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SubJaccardError(Exception):
    """Base class for library errors."""


class GroundMismatch(SubJaccardError, ValueError):
    """Two subsets (or a subset and a function) live on different ground sets."""


class CapExceeded(SubJaccardError, ValueError):
    """A requested enumeration exceeds the configured size cap."""


class MalformedSpec(SubJaccardError, ValueError):
    """A set-function description violates its family's invariants."""


class UnknownLabel(SubJaccardError, KeyError):
    """An element label is not part of the ground set."""

    def __init__(self, label: str):
        super().__init__(label)
        self.label = label

    def __str__(self) -> str:
        return f"unknown element label {self.label!r}"


class ModeMismatch(SubJaccardError, TypeError):
    """Exact and approximate values were mixed."""


class PropertyViolation(SubJaccardError, ValueError):
    """An oracle produced evidence that it is negative or not monotone."""


class LengthMismatch(SubJaccardError, ValueError):
    pass


class NegativeEntry(SubJaccardError, ValueError):
    pass


class PrereqFailed(SubJaccardError):
    """A check's hypothesis (nonnegative, monotone, submodular) does not hold.

    ``failed`` names the unmet properties; ``reports`` maps each checked
    property name to its report.
    """

    def __init__(self, failed, reports):
        self.failed = list(failed)
        self.reports = dict(reports)
        super().__init__("prerequisite failed: " + ", ".join(self.failed))
