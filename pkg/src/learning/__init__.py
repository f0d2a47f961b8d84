"""Learning experiment: randomized ERM and the PAC error-curve runner."""

from .erm import ERMResult, HypothesisSpace, RandomSearchERM
from .experiment import (
    EXPERIMENT_COLUMNS,
    ExperimentConfig,
    ExperimentResult,
    ExperimentRow,
    ExperimentRunner,
    binomial_half_width,
    run_experiment,
)

__all__ = [
    "ERMResult",
    "HypothesisSpace",
    "RandomSearchERM",
    "EXPERIMENT_COLUMNS",
    "ExperimentConfig",
    "ExperimentResult",
    "ExperimentRow",
    "ExperimentRunner",
    "binomial_half_width",
    "run_experiment",
]
