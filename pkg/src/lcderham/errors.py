"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class LcdrError(Exception):
    code = "ERROR"


class ShapeMismatch(LcdrError, ValueError):
    code = "SHAPE_MISMATCH"


class ComplexViolation(LcdrError):
    code = "COMPLEX_VIOLATION"


class SingularMatrix(LcdrError, ValueError):
    code = "SINGULAR_MATRIX"


class ParseError(LcdrError, ValueError):
    code = "PARSE_ERROR"


class UnitIdeal(LcdrError, ValueError):
    code = "UNIT_IDEAL"


class NotSquarefree(LcdrError, ValueError):
    code = "NOT_SQUAREFREE"


class CommutativityFailure(LcdrError):
    code = "COMMUTATIVITY_FAILURE"


class InternalInconsistency(LcdrError):
    code = "INTERNAL_INCONSISTENCY"


class BoxTooLarge(LcdrError, ValueError):
    code = "BOX_TOO_LARGE"


class OutsideInterior(LcdrError, ValueError):
    code = "OUTSIDE_INTERIOR"
