"""Exception hierarchy shared by all modules."""


class PadicError(Exception):
    """Base class for every library error."""


# ---- field construction -------------------------------------------------

class NotPrime(PadicError):
    pass


class ReducibleDefiningPolynomial(PadicError):
    pass


class NonUnitEisensteinConstant(PadicError):
    pass


# ---- element arithmetic -------------------------------------------------

class FieldMismatch(PadicError):
    pass


class DivisionByImpreciseZero(PadicError):
    """Divisor has no known nonzero digit at its precision."""


class InsufficientPrecision(PadicError):
    pass


class ZeroElement(PadicError):
    pass


class ImpreciseValuation(PadicError):
    """An exact valuation was required but only a lower bound is known."""


class ParseError(PadicError):
    """Element literal does not conform to the grammar."""


class DenominatorNotInvertible(PadicError):
    pass


# ---- analytic maps ------------------------------------------------------

class OutsideConvergenceDomain(PadicError):
    pass


class DomainError(PadicError):
    """Argument violates a documented domain precondition."""


# ---- Tate curve ---------------------------------------------------------

class NonpositiveValuation(PadicError):
    pass


class OnKernel(PadicError):
    """The multiplicative argument is indistinguishable from a kernel point."""


class OffCurveInput(PadicError):
    pass


class PrecisionCollapse(PadicError):
    """A denominator is indistinguishable from zero but the numerator is not."""


# ---- ball combinatorics -------------------------------------------------

class MemberOfC(PadicError):
    pass


class ImpreciseDistance(PadicError):
    pass


# ---- power series division ----------------------------------------------

class NotRegular(PadicError):
    pass


class DegreeCapExceeded(PadicError):
    """An intermediate product overflows the total-degree cap; raise the cap."""


class AmbiguousAtPrecision(PadicError):
    pass


class CoefficientOutsideValuationRing(PadicError):
    pass


# ---- lattice calculus ---------------------------------------------------

class DimensionMismatch(PadicError):
    pass


class FullRank(PadicError):
    pass


class InconsistentDimensions(PadicError):
    pass


class SearchSpaceTooLarge(PadicError):
    pass
