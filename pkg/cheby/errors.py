"""Exception hierarchy shared by the engine modules."""


class ChebyError(Exception):
    """Base class for every engine failure."""


class DomainError(ChebyError, ValueError):
    """An argument lies outside the domain of the operation."""


class NonConvergence(ChebyError, ArithmeticError):
    """An iterative estimate did not reach its tolerance.

    Args:
        message: Human readable description
        estimate: Best value reached before giving up
        error_estimate: Error estimate attached to that value
        subdivisions: Work units spent (subintervals or grid cells)
    """

    def __init__(self, message, estimate=None, error_estimate=None, subdivisions=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate
        self.subdivisions = subdivisions


class DegenerateInput(ChebyError):
    """A ratio was requested for a function with vanishing derivative norm."""


class RouteDisagreement(ChebyError):
    """The identity and integration-by-parts values of T do not agree."""
