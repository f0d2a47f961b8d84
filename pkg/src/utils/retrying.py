"""Bounded retry helpers for randomized searches."""

from typing import Tuple, Type

from tenacity import (
    Retrying,
    retry_if_exception_type,
    stop_after_attempt,
)


class RejectedDraw(Exception):
    """A random draw failed its acceptance test; the caller should draw again."""

    def __init__(self, score: float):
        super().__init__(f"draw rejected (score={score:.3e})")
        self.score = score


def bounded_attempts(
    max_attempts: int,
    retry_on: Tuple[Type[BaseException], ...] = (RejectedDraw,),
) -> Retrying:
    """Retry controller that re-runs a block up to max_attempts times.

    Attempts run back to back with no wait. The final exception is re-raised
    unchanged.
    """
    return Retrying(
        stop=stop_after_attempt(max_attempts),
        retry=retry_if_exception_type(retry_on),
        reraise=True,
    )
