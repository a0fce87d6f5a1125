"""Exception types shared across the package.

Every library error carries a short machine-readable ``code`` slug that the
command line front end prints on standard error.
"""


class FoldcheckError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class SurfaceFormatError(FoldcheckError):
    """A surface document is not well-formed."""

    code = "surface-format"


class DuplicateIdentifierError(SurfaceFormatError):
    code = "duplicate-identifier"


class DanglingReferenceError(SurfaceFormatError):
    code = "dangling-reference"


class InvalidSurfaceError(FoldcheckError):
    """An operation requires a surface that passes validation."""

    code = "invalid-surface"


class NotClosedError(FoldcheckError):
    code = "not-closed"


class NotConnectedError(FoldcheckError):
    code = "not-connected"


class UnknownFixtureError(FoldcheckError):
    code = "unknown-fixture"


class MapNotTotalError(FoldcheckError):
    """A map between surfaces does not cover all source elements."""

    code = "map-not-total"


class ImproperColouringError(FoldcheckError):
    code = "improper-colouring"


class GroundSetError(FoldcheckError):
    """Permutation-level contract violation (wrong ground set, bad shape)."""

    code = "ground-set"


class NotIntersectionFreeError(FoldcheckError):
    """A crossing-free chord diagram was required but chords cross."""

    code = "not-intersection-free"

    def __init__(self, message, crossings=()):
        super().__init__(message)
        self.crossings = tuple(crossings)


class OracleDisagreementError(RuntimeError):
    """Independent checks of the same fact returned different answers.

    This is never caught inside the package: it signals an implementation
    bug, not a property of the input.
    """
