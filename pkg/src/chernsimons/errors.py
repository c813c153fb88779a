"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
1 for parse/usage problems, 2 for precondition violations and 3 for a failed
internal identity (which always indicates a bug, never bad input).
"""

from __future__ import annotations


class CSError(Exception):
    exit_code = 2


# -- parse / usage -----------------------------------------------------------

class ParseError(CSError):
    exit_code = 1


class ExprSyntaxError(ParseError):
    """Malformed input text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownVariable(ParseError):
    pass


class RankMismatch(ParseError):
    pass


# -- preconditions -----------------------------------------------------------

class PoleAtSubstitution(CSError):
    pass


class NonInvertibleBinding(CSError):
    pass


class FrameContainsDifferential(CSError):
    pass


class SizeMismatch(CSError):
    pass


class InhomogeneousOperand(CSError):
    pass


class DegreeError(CSError):
    pass


class NotInversePair(CSError):
    pass


class PoleInCoefficient(CSError):
    pass


class DegreeZeroInput(CSError):
    pass


class NotClosed(CSError):
    """Raised by :func:`chernsimons.homotopy.primitive`; ``differential`` is the nonzero dω."""

    def __init__(self, differential, message: str = "form is not closed"):
        super().__init__(message)
        self.differential = differential


class NotLogShape(CSError):
    def __init__(self, message: str, term=None):
        super().__init__(message)
        self.term = term


class NotFlat(CSError):
    pass


class UnsupportedDegree(CSError):
    pass


# -- identity failures ---------------------------------------------------------

class InternalIdentityFailure(CSError):
    exit_code = 3


class ResidueNotClosed(InternalIdentityFailure):
    pass


class NoPrimitive(InternalIdentityFailure):
    pass
