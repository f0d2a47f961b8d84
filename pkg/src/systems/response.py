"""Exact response map H(λ, G) and sign observations."""

from typing import List, Sequence, Union

import numpy as np
from pydantic import BaseModel

from ..integrals import Trig, xi_basis_value
from ..utils import INTEGRATION, DimensionMismatchError, get_logger
from .models import (
    BasisFamily,
    CompactSystemParams,
    ControlMatrix,
    FullSystemParams,
    JordanBlock,
    block_eigenvalues,
    xi_slots,
)

logger = get_logger(__name__)

SystemParams = Union[FullSystemParams, CompactSystemParams]


def response_full(
    params: FullSystemParams,
    G: ControlMatrix,
    family: BasisFamily,
    tau: float = 1.0,
) -> np.ndarray:
    """
    Evaluate y(τ) for the modal parameterization.

    Component κ is h_κ + Σ_{i,r,ℓ,j} α_{irℓκ} g_ij ∫_0^τ ξ_ℓ(x_r1, x_r2, t) ω_j(t) dt,
    with ξ_1..ξ_n = t^{0..n−1} e^{at} cos(bt) and ξ_{n+1}..ξ_{2n} the sine
    counterparts.

    Args:
        params: Modal parameters (m inputs, n eigen rows, p outputs).
        G: Control matrix with m rows and k columns.
        family: The k basis functions.
        tau: Final time.

    Returns:
        Output vector of length p.
    """
    check_dimensions(params.m, G, family)
    table = lambda_table(params, family, tau)
    return np.asarray(params.offset) + np.einsum("ij,ijp->p", G.array(), table)


def response_compact(
    params: CompactSystemParams,
    G: ControlMatrix,
    family: BasisFamily,
    tau: float = 1.0,
) -> float:
    """Scalar output of a compact-parameterized system."""
    check_dimensions(params.m, G, family)
    integrals = compact_xi_integrals(params.eigen_params, params.jordan_tag, family, tau)
    return float(params.offset + np.sum(G.array() * (params.coeff_array() @ integrals)))


def precompute_lambda_j(params: SystemParams, family: BasisFamily, tau: float = 1.0) -> np.ndarray:
    """
    Coefficients (λ_1(τ), …, λ_k(τ)) with y(τ) = offset + Σ_j g_j λ_j(τ).

    Only defined for scalar input and scalar output systems.
    """
    if isinstance(params, CompactSystemParams):
        if params.m != 1:
            raise DimensionMismatchError(f"precompute_lambda_j needs a scalar-input system, got m={params.m}")
        integrals = compact_xi_integrals(params.eigen_params, params.jordan_tag, family, tau)
        return params.coeff_array()[0] @ integrals

    if params.p != 1 or params.m != 1:
        raise DimensionMismatchError(
            f"precompute_lambda_j needs m = p = 1, got m={params.m}, p={params.p}"
        )
    return lambda_table(params, family, tau)[0, :, 0]


def lambda_table(params: FullSystemParams, family: BasisFamily, tau: float = 1.0) -> np.ndarray:
    """Tensor Λ[i, j, κ] = Σ_{r,ℓ} α_{irℓκ} ∫ ξ_ℓ(x_r) ω_j; zero coefficients are skipped."""
    coeffs = params.coeff_array()
    n = params.n
    integrals = np.zeros((n, 2 * n, family.k))
    for r, row in enumerate(params.eigen_table):
        a, b = row[0], row[1]
        for slot in range(2 * n):
            if not np.any(coeffs[:, r, slot, :]):
                continue
            trig = Trig.COS if slot < n else Trig.SIN
            power = slot % n
            for j, omega in enumerate(family.elements):
                integrals[r, slot, j] = xi_basis_value(
                    power, a, b, trig, omega.ell, omega.alpha, omega.beta, omega.kind, tau
                )
    return np.einsum("irlp,rlj->ijp", coeffs, integrals)


def compact_xi_integrals(
    eigen_params: Sequence[float],
    jordan_tag: List[JordanBlock],
    family: BasisFamily,
    tau: float = 1.0,
) -> np.ndarray:
    """Matrix I[c, j] = ∫_0^τ ξ_c(t) ω_j(t) dt over the n ξ-functions of a Jordan tag."""
    eigenvalues = block_eigenvalues(jordan_tag, list(eigen_params))
    slots = xi_slots(jordan_tag)
    integrals = np.empty((len(slots), family.k))
    for column, (block, power, trig) in enumerate(slots):
        a, b = eigenvalues[block]
        for j, omega in enumerate(family.elements):
            integrals[column, j] = xi_basis_value(
                power, a, b, trig, omega.ell, omega.alpha, omega.beta, omega.kind, tau
            )
    return integrals


def sign_observe(y) -> np.ndarray:
    """Componentwise sign: 1 where y > 0, 0 where y <= 0."""
    return (np.asarray(y, dtype=float) > 0).astype(np.int8)


def loss_eval(z1, z2):
    """Bounded squared loss (z1 − z2)² / (1 + (z1 − z2)²)."""
    gap = np.subtract(z1, z2)
    squared = gap * gap
    result = squared / (1.0 + squared)
    return float(result) if np.ndim(result) == 0 else result


def empirical_loss(predictions, targets) -> float:
    """Average bounded squared loss over a labelled sample."""
    predictions = np.asarray(predictions, dtype=float)
    if predictions.size == 0:
        return 0.0
    return float(np.mean(loss_eval(predictions, np.asarray(targets, dtype=float))))


class PoleHit(BaseModel):
    """An f-polynomial (x_r1 + α_j)² + (x_r2 ± β_j)² that vanishes."""

    row: int
    basis_index: int
    sign: str
    value: float


def pole_pattern(
    params: FullSystemParams,
    family: BasisFamily,
    threshold: float = INTEGRATION["degenerate_threshold"],
) -> List[PoleHit]:
    """
    Vanishing f-polynomials among eigen rows that carry non-zero coefficients.

    When β_j = 0 the two polynomials coincide and are reported once with sign "±".
    """
    coeffs = params.coeff_array()
    hits = []
    for r, row in enumerate(params.eigen_table):
        if not np.any(coeffs[:, r]):
            continue
        a, b = row[0], row[1]
        for j, omega in enumerate(family.elements):
            signs = (("±", 1.0),) if omega.beta == 0.0 else (("+", 1.0), ("-", -1.0))
            for label, sign in signs:
                value = (a + omega.alpha) ** 2 + (b + sign * omega.beta) ** 2
                if value <= threshold:
                    hits.append(PoleHit(row=r + 1, basis_index=j + 1, sign=label, value=value))
    return hits


def branch_label(params: FullSystemParams, family: BasisFamily) -> str:
    """Name of the piecewise branch the evaluator lands in."""
    hits = pole_pattern(params, family)
    if not hits:
        return "regular"
    return "+".join(f"f[r={hit.row},j={hit.basis_index},{hit.sign}]=0" for hit in hits)


def check_dimensions(m: int, G: ControlMatrix, family: BasisFamily) -> None:
    if G.m != m:
        raise DimensionMismatchError(f"G has {G.m} rows but the system has m={m} inputs")
    if G.k != family.k:
        raise DimensionMismatchError(f"G has {G.k} columns but the basis family has k={family.k}")
