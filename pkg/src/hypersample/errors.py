"""Exception types raised across the package.

Anything that signals a violated precondition (bad parameters, a bound used
outside its stated range) derives from :class:`PreconditionError`; the CLI
maps those to exit status 2.
"""


class HypersampleError(Exception):
    """Base class for all package errors."""


class PreconditionError(HypersampleError, ValueError):
    """A stated precondition on the inputs does not hold."""


# hypergraph-core
class InvalidHypergraphError(PreconditionError):
    pass


class OutOfRangeVertexError(InvalidHypergraphError):
    pass


class DuplicateVertexInEdgeError(InvalidHypergraphError):
    pass


class EmptyEdgeSetError(PreconditionError):
    pass


class IndexOutOfRangeError(PreconditionError, IndexError):
    pass


class InfeasibleParametersError(PreconditionError):
    pass


class GenerationRetriesExceededError(HypersampleError, RuntimeError):
    pass


# distributions / typical analysis
class ParameterOrderError(PreconditionError):
    pass


class DegenerateDensityError(PreconditionError):
    pass


class NonUniformError(PreconditionError):
    pass


class BudgetExceededError(PreconditionError):
    pass


# bound curves
class DomainError(PreconditionError):
    """Curve evaluated outside its domain (rk < 1, bad g parameters, k <= 1)."""


class NoAdmissibleRootError(PreconditionError):
    pass


class BracketFailureError(HypersampleError, ArithmeticError):
    pass


# adversarial
class ZeroDegreeInProfileError(PreconditionError):
    pass


class BudgetZeroError(PreconditionError):
    pass


class TooManySetsError(PreconditionError):
    pass


# rewiring
class DBelowCeilAvgError(PreconditionError):
    pass


class KBelowCeilAvgError(PreconditionError):
    pass


class NoDuplicateFreeTargetError(HypersampleError, RuntimeError):
    pass
