"""Exception hierarchy shared by every module.

Each error carries a stable, data-independent message template so the CLI
can map it to a single diagnostic string.
"""


class McdmError(Exception):
    """Base class for all domain errors."""


class DimensionMismatch(McdmError):
    pass


class DuplicateLabel(McdmError):
    pass


class InvalidValue(McdmError):
    pass


class MalformedHeader(McdmError):
    pass


class UnknownDirectionToken(McdmError):
    pass


class RaggedRow(McdmError):
    pass


class EmptyInput(McdmError):
    pass


class InsufficientData(McdmError):
    pass


class MissingCell(McdmError):
    pass


class InvalidArity(McdmError):
    pass


class DegenerateMatrix(McdmError):
    pass


class InsufficientRows(McdmError):
    pass


class ZeroColumn(McdmError):
    pass


class NonConvergence(McdmError):
    pass


class AllZero(McdmError):
    pass


class NegativeWeight(McdmError):
    pass


class DegenerateAlternative(McdmError):
    pass


class OutOfRange(McdmError):
    pass


class DegenerateBase(McdmError):
    pass


class TooFewAlternatives(McdmError):
    pass
