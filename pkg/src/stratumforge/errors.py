"""Exception hierarchy shared by every module."""


class StratumForgeError(ValueError):
    """Base class for all errors raised by this package."""


# flat_core
class BadPermutation(StratumForgeError):
    pass


class NotTransitive(StratumForgeError):
    pass


class RankDeficient(StratumForgeError):
    pass


class NotPrimitive(StratumForgeError):
    pass


class FormatError(StratumForgeError):
    pass


# invariants
class OddOrderZero(StratumForgeError):
    pass


class NotSingleCylinder(StratumForgeError):
    pass


class UnsupportedMarks(StratumForgeError):
    pass


# builders
class OverlappingSlits(StratumForgeError):
    pass


class UnmatchedSides(StratumForgeError):
    pass


class WidthTooSmall(StratumForgeError):
    pass


class NoSuchComponent(StratumForgeError):
    pass


class VerificationFailed(StratumForgeError):
    pass


class NotNormalized(StratumForgeError):
    pass


class WrongGenus(StratumForgeError):
    pass


class InconsistentGluing(StratumForgeError):
    pass


# period_checker
class SizeMismatch(StratumForgeError):
    pass


class SingularMatrix(StratumForgeError):
    pass


class NotInAbsoluteImage(StratumForgeError):
    pass


class UncertifiedSign(StratumForgeError):
    """Interval evaluation could not separate a value from zero."""


# oracle
class BoundExceeded(StratumForgeError):
    pass


class CertificationFailed(StratumForgeError):
    pass
