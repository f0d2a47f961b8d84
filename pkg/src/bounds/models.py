"""Bound inputs, options and the uniform report."""

import math
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FormulaId(str, Enum):
    """Every calculator reachable from the bounds table."""
    VC_UPPER_SCALAR = "vc_upper_scalar"
    VC_UPPER_SCALAR_ZERO_STATE = "vc_upper_scalar_zero_state"
    VC_LOWER = "vc_lower"
    VC_UPPER_VECTOR = "vc_upper_vector"
    PD_UPPER = "pd_upper"
    FAT_LIPSCHITZ = "fat_lipschitz"
    FAT_CONTROL = "fat_control"
    FAT_COMBINED = "fat_combined"
    FAT_HYPERPLANE = "fat_hyperplane"
    SAMPLE_COMPLEXITY_CONCEPT = "sample_complexity_concept"
    SAMPLE_COMPLEXITY_AGNOSTIC = "sample_complexity_agnostic"
    GJ_BOUND = "gj_bound"
    SIGN_PATTERN_COUNT = "sign_pattern_count"
    POLE_FREE_COUNT = "pole_free_count"
    DUAL_VC_LOWER = "dual_vc_lower"
    AXIS_SHATTER_BOUND = "axis_shatter_bound"
    DMAX_RAT = "dmax_rat"
    RAT_VC_ABSTRACT = "rat_vc_abstract"
    XI_BASIS_COUNT = "xi_basis_count"


class Rounding(str, Enum):
    FLOOR = "floor"
    CEIL = "ceil"


class Ball(str, Enum):
    """Parameter set of the Lipschitz fat-shattering bound."""
    OPEN_INF = "open_inf"
    CLOSED_INF = "closed_inf"
    CLOSED_L2 = "closed_l2"


class CountMode(str, Enum):
    CLOSED_SUM = "closed_sum"
    ENUMERATE = "enumerate"


class ProblemDims(BaseModel):
    """Shared problem dimensions and accuracy parameters."""

    model_config = ConfigDict(extra="forbid", frozen=True, allow_inf_nan=False)

    n: int = Field(1, ge=1)
    m: int = Field(1, ge=1)
    p: int = Field(1, ge=1)
    k: int = Field(1, ge=1)
    ell_max: int = Field(0, ge=0)
    tau: float = Field(1.0, ge=1.0)
    M: float = Field(1.0, gt=0)
    R: float = Field(1.0, gt=0)
    gamma: Optional[float] = Field(None, gt=0)
    eps: float = Field(0.1, gt=0, lt=1)
    delta: float = Field(0.05, gt=0, lt=1)
    kappa: float = Field(0.125, gt=0, lt=0.25)
    h_rat: int = Field(2, ge=1)
    d_rat: Optional[int] = Field(None, ge=1)

    @property
    def margin(self) -> float:
        """γ if supplied, otherwise (1/4 − κ) ε."""
        if self.gamma is not None:
            return self.gamma
        return (0.25 - self.kappa) * self.eps

    @property
    def degree(self) -> int:
        return self.d_rat if self.d_rat is not None else 4 * (self.n + self.ell_max)


class BoundOptions(BaseModel):
    """Formula-specific inputs; unset fields fall back to values derived from ProblemDims."""

    model_config = ConfigDict(extra="forbid", frozen=True, allow_inf_nan=False)

    C: float = Field(1.0, gt=0)
    L: Optional[float] = Field(None, gt=0)
    ball: Ball = Ball.OPEN_INF
    variant: Rounding = Rounding.FLOOR
    rounding: Rounding = Rounding.CEIL
    alpha: Optional[float] = Field(None, gt=0, lt=1)
    vc_value: Optional[float] = Field(None, ge=0)
    fat_value: Optional[float] = Field(None, ge=0)
    vc_dual: int = Field(1, ge=1)
    axis_sizes: List[int] = Field(default_factory=lambda: [1])
    gj_ell: Optional[int] = Field(None, ge=1)
    gj_degree: Optional[int] = Field(None, ge=1)
    gj_count: Optional[int] = Field(None, ge=1)
    n_vars: Optional[int] = Field(None, ge=1)
    m_polys: Optional[int] = Field(None, ge=1)
    count_mode: CountMode = CountMode.CLOSED_SUM

    @model_validator(mode="after")
    def _check_axis_sizes(self) -> "BoundOptions":
        if any(size < 1 for size in self.axis_sizes):
            raise ValueError("axis_sizes entries must be >= 1")
        return self


class BoundReport(BaseModel):
    """One evaluated formula."""

    formula_id: FormulaId
    value: float
    ceil_value: int
    inputs: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    extras: Dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_value(self) -> "BoundReport":
        if not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"{self.formula_id.value}: bound value must be finite and >= 0, got {self.value}")
        return self

    @classmethod
    def build(
        cls,
        formula_id: FormulaId,
        value: float,
        inputs: Dict[str, Any],
        notes: Optional[List[str]] = None,
        extras: Optional[Dict[str, float]] = None,
    ) -> "BoundReport":
        value = float(value)
        return cls(
            formula_id=formula_id,
            value=value,
            ceil_value=math.ceil(value) if math.isfinite(value) else 0,
            inputs=inputs,
            notes=notes or [],
            extras=extras or {},
        )
