"""Exception hierarchy for the weylwin library."""


class WeylwinError(Exception):
    """Base class for all library errors."""


class InputError(WeylwinError):
    """Malformed or inconsistent user input (group data, weights, files)."""


class NotInvariantError(WeylwinError):
    """An argument that must be invariant under a sub-Weyl group is not."""


class InexactDivisionError(WeylwinError):
    """A division that is mathematically exact failed; signals a bug."""


class WindowEscapeError(WeylwinError):
    """An operator image used a character outside the expected window basis."""


class FaceMismatchError(WeylwinError):
    """A twisted weight did not land in the expected face basis."""


class DecompositionError(WeylwinError):
    """The primitive/boundary splitting failed an exactness check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
