"""Exception types shared across the package."""


class QuadCIError(Exception):
    """Base class for all quadci errors."""


class FieldMismatch(QuadCIError):
    """Operands belong to different coefficient fields."""


class InputError(QuadCIError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class ParseError(InputError):
    """Unparseable scalar or polynomial expression."""


class CapExceeded(QuadCIError):
    """A configured resource cap was breached (CLI exit code 3)."""


class SingularMatrix(QuadCIError):
    """A coordinate-change matrix is not invertible."""


class NotArtinian(QuadCIError):
    """The quotient is infinite dimensional where a finite one is required."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SocleNotOneDimensional(QuadCIError):
    """The socle has dimension != 1, so the quotient is not Gorenstein."""

    def __init__(self, message, dimensions=None):
        super().__init__(message)
        self.dimensions = dimensions


class SelectedFactorsDependent(QuadCIError):
    """The distinguished linear factors are linearly dependent.

    For a regular input this cannot happen, so it signals a non-regular
    sequence.
    """


class ZeroDiagonalCoefficient(QuadCIError):
    """A transformed factor lost its own variable.

    After the coordinate change, some factor of the i-th polynomial has a
    zero coefficient on the i-th variable; this contradicts regularity of
    the input.
    """
