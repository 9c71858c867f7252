"""Exception hierarchy shared by all mubkit modules."""


class MubkitError(Exception):
    """Base class for all errors raised by mubkit."""


class NotPrimeError(MubkitError):
    """Requested field characteristic is not a prime number."""


class NotIrreducibleError(MubkitError):
    """Modulus polynomial is reducible over the prime field."""


class NotBasicPrimitiveError(MubkitError):
    """Ring modulus fails the basic-primitivity requirements."""


class DegreeOutOfRangeError(MubkitError):
    """Structure size exceeds the supported desk-scale range."""


class SpecMismatchError(MubkitError):
    """Elements of different field/ring specs were combined."""


class EvenCharacteristicError(MubkitError):
    """Operation requires odd characteristic."""


class CharacteristicTooSmallError(MubkitError):
    """Cubic-phase construction rejects characteristic 2 and 3."""


class DegenerateQuadraticError(MubkitError):
    """Quadratic character-sum oracle got a vanishing leading coefficient."""


class MixedRootOrdersError(MubkitError):
    """Flat bases of one family carry different root-of-unity orders."""


class SchemaViolationError(MubkitError):
    """Family document violates the interchange schema or invariants."""


class DimensionMismatchError(MubkitError):
    """Matrix or family dimensions are inconsistent."""


class ExponentOutOfRangeError(MubkitError):
    """Exponent entry falls outside [0, root_order)."""


class EmptyInputError(MubkitError):
    """Operation needs at least one input family."""


class InvalidTargetError(MubkitError):
    """Search target count is impossible (above d+1 or below the prefix)."""
