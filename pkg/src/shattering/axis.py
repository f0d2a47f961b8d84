"""h-transform, rank-k λ search and the axis-shattering construction."""

import itertools
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..bounds import axis_shatter_bound
from ..integrals import evaluate_monomial
from ..systems import BasisFamily, BasisFunction
from ..utils import (
    INTERPOLATION,
    RANK_SEARCH,
    InvalidInputError,
    RejectedDraw,
    SearchExhaustedError,
    bounded_attempts,
    get_logger,
)
from .base import ShatterConstruction, constructions
from .models import DichotomyPattern, ShatterReport

logger = get_logger(__name__)

GRID_LIMIT = 4096


def h_transform(lam: float, omega: BasisFunction) -> float:
    """h(λ) = ∫_0^1 e^{λt} ω(t) dt."""
    value, _, _ = evaluate_monomial(omega.ell, lam + omega.alpha, omega.beta, omega.kind, 1.0)
    return value


def lambda_matrix(lambdas, family: BasisFamily) -> np.ndarray:
    """H[i, j] = h_j(λ_i)."""
    return np.array([[h_transform(float(lam), omega) for omega in family.elements] for lam in lambdas])


class RankSearchConfig(BaseModel):
    """Random search for λ_1..λ_k with a well-conditioned h-matrix."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    range: Tuple[float, float] = RANK_SEARCH["range"]
    attempts: int = Field(RANK_SEARCH["attempts"], ge=1)
    cond_threshold: float = Field(RANK_SEARCH["cond_threshold"], gt=1.0)
    seed: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _check_range(self) -> "RankSearchConfig":
        if not self.range[0] < self.range[1]:
            raise ValueError("range must be an increasing pair")
        return self


def _condition(matrix: np.ndarray) -> float:
    condition = float(np.linalg.cond(matrix))
    return condition if np.isfinite(condition) else float("inf")


def find_rank_k_lambdas(family: BasisFamily, search: RankSearchConfig) -> List[float]:
    """
    Draw λ_1..λ_k uniformly on search.range until [h_j(λ_i)] is well conditioned.

    Args:
        family: The k basis functions.
        search: Range, attempt budget, condition threshold and seed.

    Returns:
        Sorted λ values whose h-matrix has condition number below the threshold.

    Raises:
        SearchExhaustedError: No draw passed within the attempt budget.
    """
    rng = np.random.default_rng(search.seed)
    lo, hi = search.range
    best = float("inf")
    accepted: List[float] = []

    try:
        for attempt in bounded_attempts(search.attempts):
            with attempt:
                lambdas = np.sort(rng.uniform(lo, hi, size=family.k))
                condition = _condition(lambda_matrix(lambdas, family))
                best = min(best, condition)
                if condition >= search.cond_threshold:
                    raise RejectedDraw(condition)
                accepted = lambdas.tolist()
    except RejectedDraw:
        raise SearchExhaustedError(
            f"no well-conditioned λ set in {search.attempts} attempts (best condition {best:.3e})",
            best_condition=best,
        )

    logger.debug("Rank-k lambdas found", k=family.k, condition=best)
    return accepted


def solve_interpolation(matrix: np.ndarray, targets: np.ndarray) -> Tuple[np.ndarray, float]:
    """Solve H g = targets; returns g and the max-norm residual."""
    g = np.linalg.solve(matrix, targets)
    residual = float(np.max(np.abs(matrix @ g - targets)))
    return g, residual


def snap(values: np.ndarray, tol: float) -> np.ndarray:
    """Zero out entries within tol of 0."""
    values = np.asarray(values, dtype=float).copy()
    values[np.abs(values) <= tol] = 0.0
    return values


@constructions.register
class AxisShatterConstruction(ShatterConstruction):
    """
    Axis shattering of the map (λ_1..λ_{m'}) ↦ sign Σ_i Σ_j g_j h_j(λ_i).

    The k rank-k λ's are split into m' = min(n, k) blocks of ⌊k/m'⌋; for each
    block and each dichotomy of it, g interpolates the dichotomy on the block
    and 0 on every other λ.
    """

    name = "axis"

    def __init__(
        self,
        n: int,
        family: BasisFamily,
        search: Optional[RankSearchConfig] = None,
        residual_tol: float = INTERPOLATION["residual_tol"],
    ):
        if n < 1:
            raise InvalidInputError(f"n must be >= 1, got {n}")
        self.n = n
        self.family = family
        self.search = search or RankSearchConfig()
        self.residual_tol = residual_tol
        self.width = min(n, family.k)
        self.block_size = family.k // self.width

    def blocks(self) -> List[List[int]]:
        return [list(range(s * self.block_size, (s + 1) * self.block_size)) for s in range(self.width)]

    def _axis_bits(self, realized: np.ndarray, axis: int) -> Optional[Tuple[int, ...]]:
        """Signs along one axis, or None when some grid point disagrees."""
        blocks = self.blocks()
        values = snap(realized, self.residual_tol)
        bits = tuple(int(values[i] > 0) for i in blocks[axis])
        if self.block_size ** self.width > GRID_LIMIT:
            grid = [tuple(block[0] if s != axis else i for s, block in enumerate(blocks)) for i in blocks[axis]]
        else:
            grid = itertools.product(*blocks)
        for point in grid:
            expected = bits[blocks[axis].index(point[axis])]
            if int(sum(values[i] for i in point) > 0) != expected:
                return None
        return bits

    def run(self) -> ShatterReport:
        lambdas = find_rank_k_lambdas(self.family, self.search)
        matrix = lambda_matrix(lambdas, self.family)
        positive = INTERPOLATION["positive_target"]
        witnesses: Dict[str, Dict[str, Any]] = {}
        failures: Dict[str, str] = {}

        for axis, block in enumerate(self.blocks()):
            for pattern in DichotomyPattern.all(self.block_size):
                key = f"axis{axis + 1}:{pattern.key}"
                targets = np.zeros(self.family.k)
                targets[block] = np.asarray(pattern.bits, dtype=float) * positive
                g, residual = solve_interpolation(matrix, targets)
                if residual > self.residual_tol:
                    failures[key] = f"interpolation residual {residual:.3e}"
                    continue
                bits = self._axis_bits(matrix @ g, axis)
                if bits != pattern.bits:
                    failures[key] = "realized signs disagree with the dichotomy on the grid"
                    continue
                witnesses[key] = {"axis": axis + 1, "lambdas": lambdas, "g": g.tolist(), "residual": residual}

        notes = [f"block size {self.block_size}", f"{self.family.k - self.width * self.block_size} lambdas in M"]
        if self.block_size ** self.width > GRID_LIMIT:
            notes.append("grid check restricted to one line per axis")
        return ShatterReport.assemble(
            construction=self.name,
            points=[{"axis": s + 1, "lambdas": [lambdas[i] for i in block]} for s, block in enumerate(self.blocks())],
            witnesses=witnesses,
            expected_patterns=self.width * 2 ** self.block_size,
            certified_lower_bound=float(axis_shatter_bound([self.block_size] * self.width)),
            failures=failures,
            notes=notes,
        )

    def evaluate_witness(self, record: Dict[str, Any]) -> Optional[str]:
        matrix = lambda_matrix(record["lambdas"], self.family)
        axis = int(record["axis"]) - 1
        bits = self._axis_bits(matrix @ np.asarray(record["g"]), axis)
        if bits is None:
            return None
        return f"axis{axis + 1}:{DichotomyPattern.from_bits(bits).key}"


def axis_shatter_construct(
    n: int, family: BasisFamily, search: Optional[RankSearchConfig] = None
) -> ShatterReport:
    return AxisShatterConstruction(n, family, search).run()
