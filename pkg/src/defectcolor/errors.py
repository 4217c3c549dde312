"""Exception hierarchy shared by every module."""


class DefectColorError(Exception):
    """Base class for all package errors."""


class RotationError(DefectColorError, ValueError):
    """The rotation table does not describe a connected simple plane graph."""


class AsymmetricRotation(RotationError):
    pass


class Disconnected(RotationError):
    pass


class LoopOrMultiEdge(RotationError):
    pass


class EulerViolation(RotationError):
    pass


class UnknownVertex(DefectColorError, KeyError):
    pass


class UnknownFace(DefectColorError, KeyError):
    pass


class ParseError(DefectColorError, ValueError):
    """Malformed input file. Carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)


class UnsupportedLength(DefectColorError, ValueError):
    pass


class Acyclic(DefectColorError, ValueError):
    pass


class PatternLengthMismatch(DefectColorError, ValueError):
    pass


class PartialColoring(DefectColorError, ValueError):
    pass


class TooLarge(DefectColorError, ValueError):
    pass


class NotInClass(DefectColorError, ValueError):
    pass


class ListTooSmall(DefectColorError, ValueError):
    pass


class WitnessStale(DefectColorError, ValueError):
    pass


class ExtensionFailed(DefectColorError, RuntimeError):
    """An extension routine produced no valid coloring.

    On a verified witness this is a transcription bug and must never be
    swallowed.
    """


class PreconditionViolation(DefectColorError, ValueError):
    pass


class CounterexampleFound(DefectColorError, AssertionError):
    pass
