"""Types for exponential-trigonometric integrals."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class Trig(str, Enum):
    """Trigonometric factor of a monomial or basis function."""
    SIN = "sin"
    COS = "cos"


class Branch(str, Enum):
    """Piecewise branch taken by the closed-form evaluator."""
    REGULAR = "regular"
    DEGENERATE = "degenerate_denominator"


class ExpTrigMonomial(BaseModel):
    """One term t^K e^{rate t} sin|cos(freq t)."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    power: int = Field(ge=0)
    rate: float
    freq: float
    phase: Trig

    @property
    def denominator(self) -> float:
        return self.rate * self.rate + self.freq * self.freq


class IntegralResult(BaseModel):
    """Value of a monomial integral and the branch that produced it."""

    model_config = ConfigDict(frozen=True)

    value: float
    branch: Branch
    denom_magnitude: float
