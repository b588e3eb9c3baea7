"""Exception hierarchy.

Each error carries a short ``code`` that the CLI echoes in its JSON error
payload.  ``InputError`` subclasses map to exit status 1, ``PreconditionError``
subclasses to exit status 2.
"""


class ThurstonLabError(Exception):
    code = "ERROR"


class InputError(ThurstonLabError, ValueError):
    code = "INPUT_ERROR"


class PreconditionError(ThurstonLabError):
    code = "PRECONDITION_VIOLATED"


class DimensionMismatch(InputError):
    code = "DIMENSION_MISMATCH"


class EmptyInput(InputError):
    code = "EMPTY_INPUT"


class ZeroPolynomialError(InputError):
    code = "ZERO_POLYNOMIAL"


class InvalidBallError(InputError):
    """The vertex data does not describe a dual Thurston norm ball."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class SchemaError(InputError):
    code = "SCHEMA_ERROR"


class ZeroVectorError(InputError):
    code = "ZERO_VECTOR"


class ZeroNormError(PreconditionError):
    code = "ZERO_NORM"


class MissingAnnotationError(PreconditionError):
    code = "MISSING_ANNOTATIONS"


class TorsionEulerError(PreconditionError):
    code = "TORSION_EULER"


class GysinViolation(PreconditionError):
    code = "GYSIN_VIOLATION"


class NotDivisibleError(PreconditionError):
    code = "NOT_DIVISIBLE"


class ZeroEulerClassError(PreconditionError):
    code = "ZERO_EULER_CLASS"


class MissingDataError(PreconditionError):
    code = "MISSING_DATA"
