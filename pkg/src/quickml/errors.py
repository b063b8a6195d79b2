"""Exception hierarchy for quickml.

Every library-raised error derives from QuickMLError so callers can catch
one base class; the concrete subclasses name the contract that was broken.
"""


class QuickMLError(Exception):
    pass


class ShapeMismatch(QuickMLError):
    pass


class NonFiniteData(QuickMLError):
    pass


class SingularMatrix(QuickMLError):
    pass


class NotSymmetric(QuickMLError):
    pass


class NoConvergence(QuickMLError):
    pass


class EmptyInput(QuickMLError):
    pass


class TooFewRows(QuickMLError):
    pass


class RatioOutOfRange(QuickMLError):
    pass


class DegreeZero(QuickMLError):
    pass


class DegenerateX(QuickMLError):
    pass


class NonBinaryLabels(QuickMLError):
    pass


class LabelsNotPlusMinusOne(QuickMLError):
    pass


class SingleClass(QuickMLError):
    pass


class DivergedToNaN(QuickMLError):
    pass


class KOutOfRange(QuickMLError):
    pass


class ClassTooSmall(QuickMLError):
    pass


class KZero(QuickMLError):
    pass


class KTooLarge(QuickMLError):
    pass


class TooManyComponents(QuickMLError):
    pass


class AllZeroVariance(QuickMLError):
    pass


class ConstantTarget(QuickMLError):
    pass


class MoreThanTwoClasses(QuickMLError):
    pass


class NonNumericCell(QuickMLError):
    """A CSV cell failed to parse as a number.

    Attributes: row (0-based data row, header excluded) and col (0-based
    column index in file order); col_name carries the header label.
    """

    def __init__(self, row, col, col_name, value):
        self.row = row
        self.col = col
        self.col_name = col_name
        self.value = value
        super().__init__(
            f"non-numeric cell {value!r} at data row {row}, column {col} ({col_name})"
        )


class MissingTargetColumn(QuickMLError):
    pass


class SpecInvalid(QuickMLError):
    pass


class KeyMismatch(QuickMLError):
    pass


class IoError(QuickMLError):
    pass
