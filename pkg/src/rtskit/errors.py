"""Exception types shared across the package.

The groups below drive the CLI exit codes: bad inputs or parameters exit
with 2, domain-level failures (a repair that cannot happen, shares that do
not reconstruct) with 3, and exceeded size guards with 4.
"""


class RTSKitError(Exception):
    """Base class for every error raised by this package."""


# -- input / parameter errors ------------------------------------------------

class NotPrime(RTSKitError):
    pass


class DegreeOutOfRange(RTSKitError):
    pass


class SizeOutOfRange(RTSKitError):
    pass


class SpecMismatch(RTSKitError):
    """Elements of two different field specs were combined."""


class InadmissibleOrder(RTSKitError):
    pass


class NotPrimePower(RTSKitError):
    pass


class UnsupportedOrder(RTSKitError):
    pass


class NotAdmissible(RTSKitError):
    """Design parameters fail an integrality or certification requirement."""


class ParseError(RTSKitError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolation(RTSKitError):
    pass


# -- domain failures ----------------------------------------------------------

class DivisionByZero(RTSKitError, ZeroDivisionError):
    pass


class NotEnoughShares(RTSKitError):
    pass


class InconsistentShares(RTSKitError):
    pass


class RepairImpossible(RTSKitError):
    """No available donor covers some point of the target block.

    ``points`` lists exactly the block points whose cutsets failed.
    """

    def __init__(self, points):
        self.points = tuple(points)
        pts = ",".join(str(x) for x in self.points)
        super().__init__(f"no available donor for point(s) {pts}")


# -- guard violations ----------------------------------------------------------

class TooLarge(RTSKitError):
    """A size guard on an exhaustive computation was exceeded."""


INPUT_ERRORS = (
    NotPrime,
    DegreeOutOfRange,
    SizeOutOfRange,
    SpecMismatch,
    InadmissibleOrder,
    NotPrimePower,
    UnsupportedOrder,
    NotAdmissible,
    ParseError,
    InvariantViolation,
)

DOMAIN_ERRORS = (
    DivisionByZero,
    NotEnoughShares,
    InconsistentShares,
    RepairImpossible,
)

GUARD_ERRORS = (TooLarge,)
