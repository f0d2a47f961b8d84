"""Randomized, certificate-style lower-bound estimators for VC, pseudo and fat-shattering dimensions."""

import itertools
from abc import abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..systems import sign_observe
from ..utils import InvalidInputError, get_logger, get_settings
from .base import ShatterConstruction, constructions
from .classes import FunctionClass
from .models import DichotomyPattern, ShatterReport

logger = get_logger(__name__)


class LevelSearchConfig(BaseModel):
    """How the per-point levels r_x are chosen."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: Literal["midrange", "grid"] = "midrange"
    grid_size: int = Field(5, ge=1)
    max_combinations: int = Field(4096, ge=1)


def _split_budget(budget: int, workers: int) -> List[int]:
    base, extra = divmod(budget, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def sample_parameters(
    function_class: FunctionClass, budget: int, seed: int, workers: int = 1
) -> np.ndarray:
    """
    Draw budget parameter vectors split across independent worker streams.

    Worker w uses SeedSequence(seed).spawn(workers)[w]; rows are concatenated in
    worker order, so the result does not depend on scheduling.
    """
    if budget < 1:
        raise InvalidInputError(f"budget must be >= 1, got {budget}")
    if workers < 1:
        raise InvalidInputError(f"workers must be >= 1, got {workers}")
    streams = np.random.SeedSequence(seed).spawn(workers)
    shares = _split_budget(budget, workers)

    def draw(index: int) -> np.ndarray:
        return function_class.sample(np.random.default_rng(streams[index]), shares[index])

    pool_size = min(get_settings().max_workers, workers)
    with ThreadPoolExecutor(max_workers=pool_size) as pool:
        chunks = list(pool.map(draw, range(workers)))
    return np.vstack(chunks)


@constructions.register
class EmpiricalVC(ShatterConstruction):
    """Collect sign patterns of randomly drawn class members on a fixed point set."""

    name = "empirical-vc"

    def __init__(self, function_class: FunctionClass, points, budget: int, seed: int, workers: int = 1):
        if budget < 1:
            raise InvalidInputError(f"budget must be >= 1, got {budget}")
        self.function_class = function_class
        self.points = np.atleast_2d(np.asarray(points, dtype=float))
        self.budget = budget
        self.seed = seed
        self.workers = workers

    def _key(self, theta: np.ndarray) -> str:
        return DichotomyPattern.from_bits(sign_observe(self.function_class.evaluate(theta, self.points))).key

    def run(self) -> ShatterReport:
        thetas = sample_parameters(self.function_class, self.budget, self.seed, self.workers)
        witnesses: Dict[str, Dict[str, Any]] = {}
        for draw, theta in enumerate(thetas):
            key = self._key(theta)
            if key not in witnesses:
                witnesses[key] = {"draw": draw, "theta": theta.tolist()}
        d = len(self.points)
        logger.debug("Empirical VC search done", points=d, patterns=len(witnesses), budget=self.budget)
        report = ShatterReport.assemble(
            construction=self.name,
            points=self.points.tolist(),
            witnesses=witnesses,
            expected_patterns=2 ** d,
            certified_lower_bound=float(d),
        )
        if not report.complete:
            report.notes.append("inconclusive: missing patterns prove nothing")
        return report

    def evaluate_witness(self, record: Dict[str, Any]) -> Optional[str]:
        return self._key(np.asarray(record["theta"], dtype=float))


def _level_candidates(values: np.ndarray, gamma: float, config: LevelSearchConfig) -> List[np.ndarray]:
    low, high = values.min(axis=0), values.max(axis=0)
    if config.mode == "midrange":
        return [(low + high) / 2.0]
    axes = []
    for lo, hi in zip(low, high):
        if hi - lo >= 2 * gamma:
            axes.append(np.linspace(lo + gamma, hi - gamma, config.grid_size))
        else:
            axes.append(np.array([(lo + hi) / 2.0]))
    return [np.asarray(levels) for levels in itertools.islice(itertools.product(*axes), config.max_combinations)]


class _LevelShattering(ShatterConstruction):
    """Search jointly for levels r_x and class members splitting the points around them."""

    def __init__(
        self,
        function_class: FunctionClass,
        points,
        budget: int,
        seed: int,
        level_search: Optional[LevelSearchConfig] = None,
        workers: int = 1,
    ):
        if budget < 1:
            raise InvalidInputError(f"budget must be >= 1, got {budget}")
        self.function_class = function_class
        self.points = np.atleast_2d(np.asarray(points, dtype=float))
        self.budget = budget
        self.seed = seed
        self.level_search = level_search or LevelSearchConfig()
        self.workers = workers

    @property
    def margin(self) -> float:
        return 0.0

    @abstractmethod
    def split(self, values: np.ndarray, levels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """(above, decided) masks; a draw realizes a pattern only where every point is decided."""
        pass

    def _patterns(self, values: np.ndarray, levels: np.ndarray) -> Dict[str, int]:
        """Pattern key → first draw index realizing it around levels."""
        above, decided = self.split(values, levels)
        patterns: Dict[str, int] = {}
        for draw in np.flatnonzero(np.all(decided, axis=1)):
            key = DichotomyPattern.from_bits(above[draw].astype(int)).key
            patterns.setdefault(key, int(draw))
        return patterns

    def notes(self) -> List[str]:
        return []

    def run(self) -> ShatterReport:
        thetas = sample_parameters(self.function_class, self.budget, self.seed, self.workers)
        values = self.function_class.evaluate_batch(thetas, self.points)

        best_levels, best_patterns = None, {}
        for levels in _level_candidates(values, self.margin, self.level_search):
            patterns = self._patterns(values, levels)
            if best_levels is None or len(patterns) > len(best_patterns):
                best_levels, best_patterns = levels, patterns

        witnesses = {
            key: {"draw": draw, "theta": thetas[draw].tolist(), "levels": best_levels.tolist()}
            for key, draw in best_patterns.items()
        }
        logger.debug(f"{self.name} search done", points=len(self.points), patterns=len(witnesses))
        report = ShatterReport.assemble(
            construction=self.name,
            points=self.points.tolist(),
            witnesses=witnesses,
            expected_patterns=2 ** len(self.points),
            certified_lower_bound=float(len(self.points)),
            notes=self.notes() + [f"levels {best_levels.tolist()}", f"level search {self.level_search.mode}"],
        )
        if not report.complete:
            report.notes.append("inconclusive: missing patterns prove nothing")
        return report

    def evaluate_witness(self, record: Dict[str, Any]) -> Optional[str]:
        values = self.function_class.evaluate(np.asarray(record["theta"], dtype=float), self.points)
        above, decided = self.split(values[None, :], np.asarray(record["levels"], dtype=float))
        if not np.all(decided):
            return None
        return DichotomyPattern.from_bits(above[0].astype(int)).key


@constructions.register
class EmpiricalFat(_LevelShattering):
    """γ-shattering: f(x) ≥ r_x + γ for label 1 and f(x) ≤ r_x − γ for label 0."""

    name = "empirical-fat"

    def __init__(
        self,
        function_class: FunctionClass,
        points,
        gamma: float,
        budget: int,
        seed: int,
        level_search: Optional[LevelSearchConfig] = None,
        workers: int = 1,
    ):
        if gamma <= 0:
            raise InvalidInputError(f"gamma must be positive, got {gamma}")
        super().__init__(function_class, points, budget, seed, level_search, workers)
        self.gamma = gamma

    @property
    def margin(self) -> float:
        return self.gamma

    def split(self, values: np.ndarray, levels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        above = values >= levels + self.gamma
        return above, above | (values <= levels - self.gamma)

    def notes(self) -> List[str]:
        return [f"gamma {self.gamma}"]


@constructions.register
class EmpiricalPseudo(_LevelShattering):
    """Pseudo-shattering: f(x) > r_x for label 1 and f(x) ≤ r_x for label 0, no margin."""

    name = "empirical-pseudo"

    def split(self, values: np.ndarray, levels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        above = values > levels
        return above, np.ones_like(above, dtype=bool)


def empirical_vc_lower(
    function_class: FunctionClass, points, budget: int, seed: int, workers: int = 1
) -> ShatterReport:
    return EmpiricalVC(function_class, points, budget, seed, workers).run()


def empirical_fat_lower(
    function_class: FunctionClass,
    points,
    gamma: float,
    budget: int,
    seed: int,
    level_search: Optional[LevelSearchConfig] = None,
    workers: int = 1,
) -> ShatterReport:
    return EmpiricalFat(function_class, points, gamma, budget, seed, level_search, workers).run()


def empirical_pseudo_lower(
    function_class: FunctionClass,
    points,
    budget: int,
    seed: int,
    level_search: Optional[LevelSearchConfig] = None,
    workers: int = 1,
) -> ShatterReport:
    return EmpiricalPseudo(function_class, points, budget, seed, level_search, workers).run()
