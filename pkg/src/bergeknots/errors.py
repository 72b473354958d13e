"""Exception types raised across the package."""


class BergeError(Exception):
    """Base class for every error raised by bergeknots."""


class NotDivisible(BergeError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class ZeroPolynomial(BergeError, ValueError):
    pass


class NotCoprime(BergeError, ValueError):
    pass


class IndexOutOfRange(BergeError, IndexError):
    pass


class DegenerateSurgery(BergeError, ValueError):
    """Surgery whose first homology has order 0 or 1, so no lens space L(p, q) with p >= 2."""


class InvalidCoefficient(BergeError, ValueError):
    pass


class ModulusMismatch(BergeError, ValueError):
    pass


class ModulusTooLarge(BergeError, ValueError):
    pass


class TrivialParameter(BergeError, ValueError):
    """Raised for (sign, 1, n): those knots are torus knots, not hyperbolic candidates."""


class NotPrimitive(BergeError, ValueError):
    pass


class UnitElement(BergeError, ValueError):
    pass


class RingMismatch(BergeError, TypeError):
    pass
