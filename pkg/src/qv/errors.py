"""Exception hierarchy shared across the package.

Every domain failure derives from :class:`QVError`; the CLI maps those to exit
code 1 and everything else (argparse) to exit code 2.
"""


class QVError(Exception):
    """Base class for domain errors."""


class NonPrime(QVError):
    pass


class NonMonic(QVError):
    pass


class OmegaNotUnit(QVError):
    pass


class NotAUnit(QVError):
    pass


class AugmentationSingular(QVError):
    pass


class ParseError(QVError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class ArityMismatch(QVError):
    pass


class NotAField(QVError):
    pass


class OmegaTrivial(QVError):
    pass


class DivisionByZero(QVError):
    pass


class NotDivisibleByP(QVError):
    pass


class NotACocycle(QVError):
    pass


class PolicyInvalid(QVError):
    pass


class BadToken(QVError):
    pass


class IndexOutOfRange(QVError):
    pass


class TooFewStrands(QVError):
    pass


class SingularPresent(QVError):
    pass


class InconsistentColoring(QVError):
    pass


class RelationNotAnnihilated(QVError):
    pass
