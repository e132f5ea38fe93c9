"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Two objects living in different ambient dimensions were combined."""


class MonomialConditionViolated(ValueError):
    """An operation needs a downward-closed point set and did not get one."""


class InfiniteSet(ValueError):
    """Standard monomials of a non zero-dimensional ideal without a degree bound."""


class NonNilpotent(ArithmeticError):
    pass


class NonIntegralEntry(ArithmeticError):
    pass


class NonUnit(ArithmeticError):
    """A power series with zero constant term was inverted."""


class NonUnitDenominator(NonUnit):
    pass


class NonzeroConstantTerm(ValueError):
    """Substitution of a series that is not in the maximal ideal."""


class SingularJacobian(ArithmeticError):
    pass


class WindowExceedsCap(ValueError):
    pass


class MissingValue(KeyError):
    pass


class ExpressionSyntaxError(ValueError):
    """Parse failure; ``pos`` is the 0-based character offset of the problem."""

    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
