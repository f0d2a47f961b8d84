"""Exception hierarchy shared by the library and the CLI."""

from typing import Optional


class VCLabError(Exception):
    """Base class for all vclab errors."""

    exit_code: int = 1


class InvalidInputError(VCLabError, ValueError):
    """Input violates a documented precondition."""

    exit_code = 2


class DimensionMismatchError(InvalidInputError):
    """Shapes of parameters, controls and basis family disagree."""


class PrecisionLimitError(InvalidInputError):
    """Request lies beyond what double precision can certify."""


class IntegrationRangeError(VCLabError, ArithmeticError):
    """An exponential factor overflows double precision."""

    exit_code = 2


class QuadratureConvergenceError(VCLabError, RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""


class SimulationDivergedError(VCLabError, RuntimeError):
    """The RK4 state became non-finite."""


class BoundOverflowError(VCLabError, OverflowError):
    """A bound value is too large to represent as a double."""

    exit_code = 2


class SearchExhaustedError(VCLabError, RuntimeError):
    """A randomized search used its whole attempt budget."""

    def __init__(self, message: str, best_condition: Optional[float] = None):
        super().__init__(message)
        self.best_condition = best_condition
