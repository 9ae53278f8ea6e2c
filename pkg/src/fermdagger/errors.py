"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FermDaggerError(Exception):
    pass


class DivisionByZero(FermDaggerError, ZeroDivisionError):
    pass


class ScalarParseError(FermDaggerError, ValueError):
    pass


class DimensionMismatch(FermDaggerError, ValueError):
    pass


class NotEven(FermDaggerError, ValueError):
    """Matrix has a nonzero entry between slots of different degree."""


class NotInvertible(FermDaggerError, ValueError):
    pass


class MissingSecondSpace(FermDaggerError, ValueError):
    pass


class ConventionMismatch(FermDaggerError, ValueError):
    pass


class NotAPairing(FermDaggerError, ValueError):
    pass


class ThetaNotInOriented(FermDaggerError, ValueError):
    pass


class ObjectMismatch(FermDaggerError, ValueError):
    pass


class MalformedBordism(FermDaggerError, ValueError):
    pass


class NotUnitaryInvolution(FermDaggerError, ValueError):
    pass


class NotAValidFunctor(FermDaggerError, ValueError):
    pass


class UnknownSuite(FermDaggerError, KeyError):
    pass


class BordSyntaxError(FermDaggerError, SyntaxError):
    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col
