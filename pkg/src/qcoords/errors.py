"""Exception types shared across the package."""


class QcoordsError(Exception):
    """Base class for all errors raised by qcoords."""


class ZeroVector(QcoordsError):
    """All amplitudes are numerically zero; no state can be normalized."""


class DimensionMismatch(QcoordsError):
    """Array length or matrix dimension does not match the declared qubit count."""


class BadSubsystem(QcoordsError):
    """Qubit indices are empty, repeated, or out of range."""


class NotUnitary(QcoordsError):
    """Matrix fails the unitarity check."""


class NotDensityMatrix(QcoordsError):
    """Matrix is not Hermitian, trace-one, and positive semidefinite."""


class NotMaximal(QcoordsError):
    """Gauge fix requested for a state that is not maximally entangled."""


class DegenerateFamily(QcoordsError):
    """Decomposition hit the degenerate family and every fallback failed."""


class Unrealizable(QcoordsError):
    """No pure state is compatible with the supplied concurrence set."""


class ParseError(QcoordsError):
    """Input text does not match the grammar.

    Carries a character position and, for JSON input, line/column.
    """

    def __init__(self, message, position=None, line=None, column=None):
        super().__init__(message)
        self.position = position
        self.line = line
        self.column = column


class UnknownName(ParseError):
    """Named state or gate name is not in the registry."""


class SchemaError(QcoordsError):
    """JSON document parsed but violates the coordinate-set schema."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class EmptyCandidates(QcoordsError):
    """Continuity selection called with no candidate coordinates."""
