"""Utility modules."""

from .config import (
    get_settings,
    Settings,
    INTEGRATION,
    SECTION7,
    RANK_SEARCH,
    INTERPOLATION,
    LEARNING,
    SELFTEST,
)
from .errors import (
    VCLabError,
    InvalidInputError,
    DimensionMismatchError,
    PrecisionLimitError,
    IntegrationRangeError,
    QuadratureConvergenceError,
    SimulationDivergedError,
    BoundOverflowError,
    SearchExhaustedError,
)
from .logging import bind_run, get_logger, setup_logging
from .retrying import RejectedDraw, bounded_attempts

__all__ = [
    # Settings
    "get_settings",
    "Settings",
    # Numerical constants
    "INTEGRATION",
    "SECTION7",
    "RANK_SEARCH",
    "INTERPOLATION",
    "LEARNING",
    "SELFTEST",
    # Errors
    "VCLabError",
    "InvalidInputError",
    "DimensionMismatchError",
    "PrecisionLimitError",
    "IntegrationRangeError",
    "QuadratureConvergenceError",
    "SimulationDivergedError",
    "BoundOverflowError",
    "SearchExhaustedError",
    # Logging
    "setup_logging",
    "bind_run",
    "get_logger",
    # Retry
    "RejectedDraw",
    "bounded_attempts",
]
