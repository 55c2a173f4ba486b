"""Exception types shared across the package."""


class TropintError(Exception):
    """Base class for all library errors."""


class NotAMatroid(TropintError):
    pass


class HasLoop(TropintError):
    pass


class InvalidRank(TropintError):
    pass


class SizeOverflow(TropintError):
    pass


class GroundSetMismatch(TropintError):
    pass


class NotAQuotient(TropintError):
    pass


class NotElementaryQuotient(TropintError):
    pass


class IndexOutOfRange(TropintError):
    pass


class NotPure(TropintError):
    pass


class NotLinearOnFacet(TropintError):
    pass


class NotInjective(TropintError):
    pass


class PointNotOnCycle(TropintError):
    pass


class NotALinealitySpace(TropintError):
    pass


class NonConicalSlice(TropintError):
    pass


class NotZeroDimensional(TropintError):
    pass


class NotSubcycle(TropintError):
    pass


class NotBalanced(TropintError):
    pass


class OutOfRange(TropintError):
    pass
