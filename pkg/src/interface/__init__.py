"""Command-line interface layer: config schemas, commands, writers and self-test."""

from .schema import (
    BoundsConfig,
    BoundsGrid,
    IntRange,
    LearnConfig,
    VERIFY_ADAPTER,
    construction_kwargs,
    format_validation_error,
    load_bounds_config,
    load_learn_config,
    load_verify_config,
    sine_family,
)
from .commands import (
    EXIT_FAILED,
    EXIT_INDETERMINATE,
    EXIT_INVALID,
    EXIT_OK,
    CommandResult,
    cmd_bounds,
    cmd_learn,
    cmd_respond,
    cmd_selftest,
    cmd_verify,
)
from .selftest import CheckResult, SelftestReport, run_selftest
from .writers import BOUND_COLUMNS, emit, frame_to_csv, to_json

__all__ = [
    # Schemas
    "BoundsConfig",
    "BoundsGrid",
    "IntRange",
    "LearnConfig",
    "VERIFY_ADAPTER",
    "construction_kwargs",
    "format_validation_error",
    "load_bounds_config",
    "load_learn_config",
    "load_verify_config",
    "sine_family",
    # Commands
    "EXIT_FAILED",
    "EXIT_INDETERMINATE",
    "EXIT_INVALID",
    "EXIT_OK",
    "CommandResult",
    "cmd_bounds",
    "cmd_learn",
    "cmd_respond",
    "cmd_selftest",
    "cmd_verify",
    # Self-test
    "CheckResult",
    "SelftestReport",
    "run_selftest",
    # Writers
    "BOUND_COLUMNS",
    "emit",
    "frame_to_csv",
    "to_json",
]
