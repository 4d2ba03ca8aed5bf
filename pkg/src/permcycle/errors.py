"""Exception hierarchy.

Every precondition violation raises a subclass of :class:`PermCycleError`;
the CLI reports the class name and exits with status 2.
"""


class PermCycleError(ValueError):
    """Base class for all library errors."""


# field construction / arithmetic
class NotPrime(PermCycleError):
    pass


class EvenCharacteristic(PermCycleError):
    pass


class ReducibleModulus(PermCycleError):
    pass


class FieldMismatch(PermCycleError):
    pass


class ZeroInverse(PermCycleError, ZeroDivisionError):
    pass


class ZeroOrder(PermCycleError):
    pass


class ZeroLog(PermCycleError):
    pass


class OrderNotDividing(PermCycleError):
    pass


# polynomials
class NegativeExponent(PermCycleError):
    pass


class PolynomialSyntaxError(PermCycleError):
    """Malformed polynomial or element text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} at position {position}")
        self.position = position


# constructions
class BadDivisibility(PermCycleError):
    pass


class OddIndex(PermCycleError):
    pass


class EqualUnits(PermCycleError):
    pass


class AllUnitsEqual(PermCycleError):
    pass


class UnitOutsideSubgroup(PermCycleError):
    pass


class BadResidue(PermCycleError):
    pass


class IndexNotMultipleOf3(PermCycleError):
    pass


class OrderMismatch(PermCycleError):
    pass


# analysis
class NotAPermutation(PermCycleError):
    pass


class NotCosetMultiplicative(PermCycleError):
    pass
