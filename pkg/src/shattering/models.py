"""Shattering witnesses, dichotomy patterns and reports."""

import math
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class IndicatorControl(BaseModel):
    """
    Indicator input ω_i with ω_i(1 − t) = 1 on [2^{-i}, 2^{-i} + 2^α], α = −2(k+1).

    The interval is given in reversed time s = 1 − t, which is where the
    output integral ∫ sin(λ s) ω_i(1 − s) ds is taken.
    """

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=1)
    k_total: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_index(self) -> "IndicatorControl":
        if self.index > self.k_total:
            raise ValueError(f"index {self.index} exceeds k_total {self.k_total}")
        return self

    @property
    def alpha(self) -> int:
        return -2 * (self.k_total + 1)

    @property
    def interval(self) -> Tuple[float, float]:
        start = math.ldexp(1.0, -self.index)
        return start, start + math.ldexp(1.0, self.alpha)

    @property
    def breakpoints(self) -> Tuple[float, float]:
        """Discontinuities of ω_i in forward time."""
        a, b = self.interval
        return 1.0 - b, 1.0 - a

    def control_value(self, t: float) -> float:
        lo, hi = self.breakpoints
        return 1.0 if lo <= t <= hi else 0.0

    @classmethod
    def family(cls, k: int) -> List["IndicatorControl"]:
        return [cls(index=i, k_total=k) for i in range(1, k + 1)]


class DichotomyPattern(BaseModel):
    """A {0,1} labelling of the points under test."""

    model_config = ConfigDict(frozen=True)

    bits: Tuple[int, ...]

    @model_validator(mode="after")
    def _binary(self) -> "DichotomyPattern":
        if any(bit not in (0, 1) for bit in self.bits):
            raise ValueError("pattern bits must be 0 or 1")
        return self

    @property
    def key(self) -> str:
        return "".join(str(bit) for bit in self.bits)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "DichotomyPattern":
        return cls(bits=tuple(int(bit) for bit in bits))

    @classmethod
    def from_mask(cls, mask: int, d: int) -> "DichotomyPattern":
        """Bit q of the pattern is bit q of mask."""
        return cls(bits=tuple((mask >> q) & 1 for q in range(d)))

    @classmethod
    def all(cls, d: int) -> List["DichotomyPattern"]:
        return [cls.from_mask(mask, d) for mask in range(2 ** d)]

    def check_length(self, d: int) -> None:
        if len(self.bits) != d:
            raise ValueError(f"pattern has {len(self.bits)} bits, point set has {d}")


class ShatterStatus(str, Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"
    INDETERMINATE = "indeterminate"


class ShatterReport(BaseModel):
    """Outcome of a shattering construction or search."""

    construction: str
    points: List[Any] = Field(default_factory=list)
    patterns_found: List[str] = Field(default_factory=list)
    expected_patterns: int = Field(ge=1)
    complete: bool
    status: ShatterStatus
    witnesses: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    indeterminate_count: int = Field(0, ge=0)
    certified_lower_bound: Optional[float] = None
    failures: Dict[str, str] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_complete(self) -> "ShatterReport":
        if self.complete != (len(self.patterns_found) == self.expected_patterns):
            raise ValueError("complete must hold exactly when every expected pattern was found")
        if self.complete and self.status != ShatterStatus.COMPLETE:
            raise ValueError("a complete report must have status 'complete'")
        return self

    @classmethod
    def assemble(
        cls,
        construction: str,
        points: List[Any],
        witnesses: Dict[str, Dict[str, Any]],
        expected_patterns: int,
        indeterminate_count: int = 0,
        certified_lower_bound: Optional[float] = None,
        failures: Optional[Dict[str, str]] = None,
        notes: Optional[List[str]] = None,
    ) -> "ShatterReport":
        """Derive completeness and status from the collected witnesses."""
        found = sorted(witnesses)
        complete = len(found) == expected_patterns
        if complete:
            status = ShatterStatus.COMPLETE
        elif indeterminate_count > 0:
            status = ShatterStatus.INDETERMINATE
        else:
            status = ShatterStatus.INCOMPLETE
        return cls(
            construction=construction,
            points=points,
            patterns_found=found,
            expected_patterns=expected_patterns,
            complete=complete,
            status=status,
            witnesses=witnesses,
            indeterminate_count=indeterminate_count,
            certified_lower_bound=certified_lower_bound if complete else None,
            failures=failures or {},
            notes=notes or [],
        )


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars/arrays nested in witness records to plain Python."""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {key: to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value
