"""Hyperplane reductions giving VC ≥ min(n, k)."""

from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from ..systems import BasisFamily, ControlMatrix, FullSystemParams, response_full, sign_observe
from ..utils import INTERPOLATION, InvalidInputError, get_logger
from .axis import RankSearchConfig, find_rank_k_lambdas, lambda_matrix
from .base import ShatterConstruction, constructions
from .models import DichotomyPattern, ShatterReport

logger = get_logger(__name__)


class HyperplaneMode(str, Enum):
    K_LE_N = "KLeN"
    N_LE_K = "NLeK"


def real_mode_system(lambdas: List[float], beta: List[float]) -> FullSystemParams:
    """Scalar system C e^{A(1−t)} B = Σ_i β_i e^{λ_i t}, one real mode per λ."""
    n = len(lambdas)
    coeffs = np.zeros((1, n, 2 * n, 1))
    coeffs[0, :, 0, 0] = beta
    return FullSystemParams.from_eigenvalues(coeffs, [(float(lam), 0.0) for lam in lambdas], [0.0])


class HyperplaneConstruction(ShatterConstruction):
    """
    Realize every dichotomy of min(n, k) control points by a system with n real modes.

    KLeN (k ≤ n): the points are the unit controls e_1..e_k and the system's
    γ_j = Σ_i β_i h_j(λ_i) acts as the normal vector. NLeK (n ≤ k): the points
    are controls g^{(q)} with Σ_j g^{(q)}_j h_j(λ_i) = δ_iq and β is the normal.
    """

    mode: HyperplaneMode

    def __init__(
        self,
        n: int,
        family: BasisFamily,
        search: Optional[RankSearchConfig] = None,
        residual_tol: float = INTERPOLATION["residual_tol"],
    ):
        self.n = n
        self.family = family
        self.k = family.k
        self.search = search or RankSearchConfig()
        self.residual_tol = residual_tol
        if n < 1:
            raise InvalidInputError(f"n must be >= 1, got {n}")
        if self.mode == HyperplaneMode.K_LE_N and self.k > n:
            raise InvalidInputError(f"KLeN needs k <= n, got k={self.k}, n={n}")
        if self.mode == HyperplaneMode.N_LE_K and n > self.k:
            raise InvalidInputError(f"NLeK needs n <= k, got n={n}, k={self.k}")
        self.d = min(n, self.k)

    def control_points(self, matrix: np.ndarray) -> np.ndarray:
        """Rows are the d control vectors (length k)."""
        if self.mode == HyperplaneMode.K_LE_N:
            return np.eye(self.k)
        return np.linalg.pinv(matrix[: self.n]).T

    def system_for(self, lambdas: List[float], matrix: np.ndarray, signs: np.ndarray) -> FullSystemParams:
        if self.mode == HyperplaneMode.K_LE_N:
            beta = np.zeros(self.n)
            beta[: self.k] = np.linalg.solve(matrix.T, signs)
            modes = list(lambdas) + [0.0] * (self.n - self.k)
            return real_mode_system(modes, beta.tolist())
        return real_mode_system(list(lambdas[: self.n]), signs.tolist())

    def outputs(self, params: FullSystemParams, points: np.ndarray) -> np.ndarray:
        return np.array([
            response_full(params, ControlMatrix(entries=[point.tolist()]), self.family)[0]
            for point in points
        ])

    def run(self) -> ShatterReport:
        lambdas = find_rank_k_lambdas(self.family, self.search)
        matrix = lambda_matrix(lambdas, self.family)
        points = self.control_points(matrix)
        positive = INTERPOLATION["positive_target"]
        witnesses: Dict[str, Dict[str, Any]] = {}
        failures: Dict[str, str] = {}

        for pattern in DichotomyPattern.all(self.d):
            signs = np.where(np.asarray(pattern.bits) == 1, positive, -positive)
            params = self.system_for(lambdas, matrix, signs)
            outputs = self.outputs(params, points)
            residual = float(np.max(np.abs(outputs - signs)))
            if residual > self.residual_tol * max(1.0, float(np.max(np.abs(params.coeff_array())))):
                failures[pattern.key] = f"response residual {residual:.3e}"
                continue
            realized = DichotomyPattern.from_bits(sign_observe(outputs)).key
            if realized != pattern.key:
                failures[pattern.key] = f"realized {realized}"
                continue
            witnesses[pattern.key] = {
                "eigen_table": params.eigen_table,
                "coeffs": params.coeffs,
                "points": points.tolist(),
                "residual": residual,
            }

        return ShatterReport.assemble(
            construction=self.name,
            points=points.tolist(),
            witnesses=witnesses,
            expected_patterns=2 ** self.d,
            certified_lower_bound=float(self.d),
            failures=failures,
            notes=[f"mode {self.mode.value}", f"lambdas {lambdas}"],
        )

    def evaluate_witness(self, record: Dict[str, Any]) -> Optional[str]:
        params = FullSystemParams(coeffs=record["coeffs"], eigen_table=record["eigen_table"], offset=[0.0])
        outputs = self.outputs(params, np.asarray(record["points"], dtype=float))
        return DichotomyPattern.from_bits(sign_observe(outputs)).key


@constructions.register
class HyperplaneKLeN(HyperplaneConstruction):
    name = "hyperplane-kln"
    mode = HyperplaneMode.K_LE_N


@constructions.register
class HyperplaneNLeK(HyperplaneConstruction):
    name = "hyperplane-nlk"
    mode = HyperplaneMode.N_LE_K


def hyperplane_lower_witness(
    mode: HyperplaneMode,
    n: int,
    family: BasisFamily,
    search: Optional[RankSearchConfig] = None,
) -> ShatterReport:
    cls = HyperplaneKLeN if HyperplaneMode(mode) == HyperplaneMode.K_LE_N else HyperplaneNLeK
    return cls(n, family, search).run()
