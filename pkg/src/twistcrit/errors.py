"""Exception types shared across the package."""


class HypothesisError(Exception):
    """A theorem hypothesis does not hold for the given input."""


class PrecisionError(ArithmeticError):
    """A p-adic result would be known to zero digits (or fewer than requested)."""


class RecognitionError(RuntimeError):
    """Algebraic recognition of a numerical point failed.

    Carries the raw complex coordinates so the caller can retry with more
    series terms or a larger denominator bound.
    """

    def __init__(self, message, x=None, y=None):
        super().__init__(message)
        self.x = x
        self.y = y


class CurveParseError(ValueError):
    """Malformed curve file or inline curve description."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
