"""Randomized empirical risk minimization over compact-parameterized systems."""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..shattering import SystemClass
from ..systems import BasisFamily, CompactSystemParams, JordanBlock, sign_observe
from ..utils import LEARNING, InvalidInputError, get_logger

logger = get_logger(__name__)


class HypothesisSpace(SystemClass):
    """Scalar-input compact systems with a free output offset, drawn uniformly from (−r, r)."""

    def __init__(
        self,
        family: BasisFamily,
        n: int,
        jordan_tag: Optional[List[JordanBlock]] = None,
        proposal_radius: float = LEARNING["proposal_radius"],
        offset_scale: float = 1.0,
    ):
        if not 0.0 < proposal_radius < 1.0:
            raise InvalidInputError(f"proposal_radius must lie in (0, 1), got {proposal_radius}")
        super().__init__(family, n, jordan_tag, radius=proposal_radius, with_offset=True)
        self.offset_scale = offset_scale

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        thetas = super().sample(rng, size)
        thetas[:, -1] *= self.offset_scale
        return thetas

    def to_params(self, theta: np.ndarray) -> CompactSystemParams:
        coeffs, eigen, offset = self.split(theta)
        return CompactSystemParams(
            coeffs=[coeffs.tolist()],
            eigen_params=eigen.tolist(),
            jordan_tag=self.jordan_tag,
            offset=offset,
        )

    def predict(self, theta: np.ndarray, controls: np.ndarray) -> np.ndarray:
        return sign_observe(self.evaluate(theta, controls))


@dataclass
class ERMResult:
    """Best hypothesis found by the search."""
    theta: np.ndarray
    train_error: float
    consistent: bool
    draws: int


class RandomSearchERM:
    """Best-of-budget empirical error minimizer that stops at the first consistent hypothesis."""

    def __init__(self, space: HypothesisSpace, budget: int = LEARNING["budget"]):
        if budget < 1:
            raise InvalidInputError(f"budget must be >= 1, got {budget}")
        self.space = space
        self.budget = budget

    def fit(self, controls: np.ndarray, labels: np.ndarray, rng: np.random.Generator) -> ERMResult:
        """
        Search the hypothesis space for a minimizer of the training error.

        Args:
            controls: Training control coefficients, one row per example.
            labels: Sign observations of the target on those controls.
            rng: Random stream for the proposals.

        Returns:
            ERMResult with the best draw; consistent is True when it has zero training error.
        """
        labels = np.asarray(labels)
        best_theta, best_error = None, np.inf
        draws = 0
        for draws, theta in enumerate(self.space.sample(rng, self.budget), start=1):
            error = float(np.mean(self.space.predict(theta, controls) != labels))
            if error < best_error:
                best_theta, best_error = theta, error
            if error == 0.0:
                break
        return ERMResult(theta=best_theta, train_error=best_error, consistent=best_error == 0.0, draws=draws)
