"""Structured logging for vclab.

Records go to stderr as JSON (console rendering at DEBUG); stdout is reserved
for command payloads so CSV and JSON output stay byte-stable.
"""

import logging
import sys
from typing import Any, Optional

import numpy as np
import structlog


def _numpy_to_builtin(_logger: Any, _method: str, event_dict: dict) -> dict:
    """Convert numpy scalars and small arrays so the JSON renderer accepts them."""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            event_dict[key] = value.item()
        elif isinstance(value, np.ndarray):
            event_dict[key] = value.tolist() if value.size <= 64 else f"ndarray{value.shape}"
    return event_dict


def setup_logging(log_level: str = "WARNING") -> None:
    """Configure stdlib logging and structlog at the given level."""
    level_name = log_level.upper()
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=getattr(logging, level_name), force=True)

    renderer = structlog.dev.ConsoleRenderer() if level_name == "DEBUG" else structlog.processors.JSONRenderer()
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            _numpy_to_builtin,
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def bind_run(command: str, seed: Optional[int] = None) -> None:
    """Attach the command name (and seed, when randomized) to every later record."""
    structlog.contextvars.clear_contextvars()
    fields = {"command": command}
    if seed is not None:
        fields["seed"] = seed
    structlog.contextvars.bind_contextvars(**fields)


def get_logger(name: Optional[str] = None) -> structlog.BoundLogger:
    return structlog.get_logger(name)
