"""Exception types raised across the package."""


class ClassGraphsError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(ClassGraphsError):
    """Permutations of different degrees were combined."""


class GroupTooLarge(ClassGraphsError):
    """Closure enumeration exceeded the element cap."""

    def __init__(self, cap: int, message: str = "") -> None:
        self.cap = cap
        super().__init__(message or f"group closure exceeded cap of {cap} elements")


class NotPrime(ClassGraphsError):
    """A prime (or prime power) was required."""


class FieldTooLarge(ClassGraphsError):
    """Requested field exceeds the supported size cap."""


class DivisionByZero(ClassGraphsError, ZeroDivisionError):
    """Multiplicative inverse of the zero field element."""


class UnsupportedField(ClassGraphsError):
    """Field does not have the shape an operation requires."""


class Unsupported(ClassGraphsError):
    """Parameter outside the range an operation implements."""


class NoValidAction(ClassGraphsError):
    """Requested semidirect action does not exist."""


class NotInvertible(ClassGraphsError):
    """Action matrix is singular over the given prime field."""


class ConstructionInvariantViolated(ClassGraphsError):
    """A constructed group failed one of its defining invariants."""


class NotNormal(ClassGraphsError):
    """Subgroup is not normal in the ambient group."""


class NotASubgroup(ClassGraphsError):
    """Claimed subgroup is not contained in the ambient group."""


class NotAMember(ClassGraphsError):
    """Element does not belong to the group."""


class SpecSyntaxError(ClassGraphsError):
    """Group-spec text failed to parse."""

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} (at position {position})")
