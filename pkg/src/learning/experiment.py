"""PAC experiment: empirical test error against the inverted sample-complexity bound."""

import asyncio
import math
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from ..bounds import invert_sample_complexity, vc_upper_scalar
from ..systems import (
    BasisFamily,
    CompactSystemParams,
    FullSystemParams,
    JordanBlock,
    precompute_lambda_j,
    sign_observe,
)
from ..utils import LEARNING, InvalidInputError, VCLabError, get_logger, get_settings
from .erm import HypothesisSpace, RandomSearchERM

logger = get_logger(__name__)

EXPERIMENT_COLUMNS = [
    "s",
    "trial",
    "test_error",
    "test_error_half_width",
    "train_error",
    "consistent",
    "draws",
    "bound_eps",
    "vc_upper",
    "flagged",
    "note",
]


@dataclass
class ExperimentConfig:
    """Everything one learning experiment needs."""
    target: Union[FullSystemParams, CompactSystemParams]
    family: BasisFamily
    seed: int
    sizes: List[int] = field(default_factory=lambda: list(LEARNING["sizes"]))
    trials: int = LEARNING["trials"]
    test_size: int = LEARNING["test_size"]
    budget: int = LEARNING["budget"]
    control_half_width: float = LEARNING["control_half_width"]
    delta: float = LEARNING["delta"]
    hypothesis_n: int = 1
    hypothesis_tag: Optional[List[JordanBlock]] = None
    proposal_radius: float = LEARNING["proposal_radius"]
    offset_scale: float = 1.0


class ExperimentRow(BaseModel):
    """One (sample size, trial) outcome; test_error is an estimate on fresh samples."""

    s: int
    trial: int
    test_error: float = Field(ge=0.0, le=1.0)
    test_error_half_width: float = Field(ge=0.0)
    train_error: float = Field(ge=0.0, le=1.0)
    consistent: bool
    draws: int
    bound_eps: float
    vc_upper: float
    flagged: bool = False
    note: str = ""


class ExperimentResult(BaseModel):
    """Rows sorted by (s, trial) plus the bound curve."""

    seed: int
    delta: float
    vc_upper: float
    rows: List[ExperimentRow]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.model_dump() for row in self.rows], columns=EXPERIMENT_COLUMNS)

    def median_test_error(self) -> pd.Series:
        return self.to_frame().groupby("s")["test_error"].median()

    def bound_curve(self) -> pd.Series:
        return self.to_frame().groupby("s")["bound_eps"].first()


def binomial_half_width(p: float, count: int, z: float = LEARNING["z_score"]) -> float:
    return z * math.sqrt(p * (1.0 - p) / count)


class ExperimentRunner:
    """Runs every (s, trial) as a worker-thread task and assembles rows in order."""

    def __init__(self, config: ExperimentConfig):
        if not config.sizes or any(s < 1 for s in config.sizes):
            raise InvalidInputError("sizes must be a non-empty list of positive integers")
        if config.trials < 1 or config.test_size < 1:
            raise InvalidInputError("trials and test_size must be >= 1")
        self.config = config
        self.family = config.family
        self.target_weights = precompute_lambda_j(config.target, config.family)
        offset = config.target.offset
        self.target_offset = float(offset[0]) if isinstance(offset, list) else float(offset)
        self.space = HypothesisSpace(
            config.family,
            config.hypothesis_n,
            config.hypothesis_tag,
            proposal_radius=config.proposal_radius,
            offset_scale=config.offset_scale,
        )
        self.learner = RandomSearchERM(self.space, config.budget)
        self.vc_upper = vc_upper_scalar(config.hypothesis_n, 1, config.family.k, config.family.ell_max)
        self.bound_eps = {
            s: invert_sample_complexity(self.vc_upper, s, config.delta) for s in config.sizes
        }

    def draw_controls(self, rng: np.random.Generator, count: int) -> np.ndarray:
        width = self.config.control_half_width
        return rng.uniform(-width, width, size=(count, self.family.k))

    def label(self, controls: np.ndarray) -> np.ndarray:
        return sign_observe(self.target_offset + controls @ self.target_weights)

    def run_trial(self, s_index: int, trial: int) -> ExperimentRow:
        s = self.config.sizes[s_index]
        rng = np.random.default_rng([self.config.seed, s_index, trial])
        common = {"s": s, "trial": trial, "bound_eps": self.bound_eps[s], "vc_upper": self.vc_upper}
        try:
            train = self.draw_controls(rng, s)
            result = self.learner.fit(train, self.label(train), rng)
            test = self.draw_controls(rng, self.config.test_size)
            predictions = self.space.predict(result.theta, test)
            test_error = float(np.mean(predictions != self.label(test)))
        except VCLabError as e:
            logger.error("Learning trial failed", s=s, trial=trial, error=str(e))
            return ExperimentRow(
                **common, test_error=1.0, test_error_half_width=0.0, train_error=1.0,
                consistent=False, draws=0, flagged=True, note=f"error: {e}",
            )

        note = "" if result.consistent else "no consistent hypothesis within budget"
        return ExperimentRow(
            **common,
            test_error=test_error,
            test_error_half_width=binomial_half_width(test_error, self.config.test_size),
            train_error=result.train_error,
            consistent=result.consistent,
            draws=result.draws,
            flagged=not result.consistent,
            note=note,
        )

    async def run(self) -> ExperimentResult:
        semaphore = asyncio.Semaphore(get_settings().max_workers)

        async def bounded(s_index: int, trial: int) -> ExperimentRow:
            async with semaphore:
                return await asyncio.to_thread(self.run_trial, s_index, trial)

        jobs = [
            bounded(s_index, trial)
            for s_index in range(len(self.config.sizes))
            for trial in range(self.config.trials)
        ]
        rows = await asyncio.gather(*jobs)
        rows = sorted(rows, key=lambda row: (row.s, row.trial))
        logger.info("Learning experiment complete", rows=len(rows), vc_upper=self.vc_upper)
        return ExperimentResult(seed=self.config.seed, delta=self.config.delta, vc_upper=self.vc_upper, rows=rows)


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    return asyncio.run(ExperimentRunner(config).run())
