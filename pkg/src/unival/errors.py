"""Exception types shared across the package."""


class UnivalError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrix(UnivalError):
    """Inversion was attempted on a matrix with zero determinant."""


class NotInSpan(UnivalError):
    """The target vector is not a linear combination of the generators."""


class NotSymmetric(UnivalError):
    """A symmetric matrix was required."""


class ParseError(UnivalError):
    """Polynomial text failed to parse.

    Carries the 0-based offset of the offending token and a description of
    what was expected there.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


class AlgebraMismatch(UnivalError):
    """Operands belong to different algebras."""


class DegreeOutOfRange(UnivalError):
    """A degree argument lies outside the graded range of the algebra."""


class IndexOutOfRange(UnivalError):
    """Matrix indices lie outside the valid range."""


class StructureViolation(UnivalError):
    """A computed matrix failed a required structural property."""


class InternalInconsistency(UnivalError):
    """An internal cross-check failed; indicates a bug, not bad input."""
