"""Exception hierarchy shared by every chromroot module."""


class ChromrootError(Exception):
    pass


class NonExactDivision(ChromrootError, ArithmeticError):
    """Polynomial division left a nonzero remainder (or a non-integral quotient)."""


class DivisionByZero(ChromrootError, ZeroDivisionError):
    pass


class ZeroPolynomial(ChromrootError, ValueError):
    pass


class NotPalindromic(ChromrootError, ValueError):
    pass


class OddDegree(ChromrootError, ValueError):
    pass


class ParseError(ChromrootError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LoopError(ParseError):
    pass


class InvalidVertex(ChromrootError, ValueError):
    pass


class ConstructionSyntaxError(ChromrootError, ValueError):
    """Malformed construction expression; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ArityError(ChromrootError, ValueError):
    pass


class ClassificationGap(ChromrootError, RuntimeError):
    """A non-exceptional Beraha index had no conjugate in a forbidden interval."""


class NotTriangulationCandidate(ChromrootError, ValueError):
    pass
