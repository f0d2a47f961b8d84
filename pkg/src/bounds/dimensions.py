"""VC, pseudo and fat-shattering dimension calculators."""

import math
from typing import Iterable, Optional, Tuple

import numpy as np

from ..utils import InvalidInputError
from .models import Ball, Rounding

LOG2_E = math.log2(math.e)
LOG2_8E = 3.0 + LOG2_E
LOG2_16E = 4.0 + LOG2_E
MANTISSA_BITS = 53
EXACT_LOG2_LIMIT = 1023.0


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidInputError(message)


def _check_dims(n: int, m: int, k: int, ell_max: int) -> None:
    _require(n >= 1 and m >= 1 and k >= 1, f"need n, m, k >= 1, got n={n}, m={m}, k={k}")
    _require(ell_max >= 0, f"need ell_max >= 0, got {ell_max}")


def _log2(value: int) -> float:
    # math.log2 is exact enough on arbitrarily large Python ints
    return math.log2(value)


def degree_term(n: int, m: int, k: int, ell_max: int) -> int:
    """8 m n² k (n + ℓ_max) + 1, the degree bound of the sign formula."""
    return 8 * m * n * n * k * (n + ell_max) + 1


def piece_count(n: int, k: int) -> int:
    """2nk + 2(1 + 2k)^n polynomials in the sign formula."""
    return 2 * n * k + 2 * (1 + 2 * k) ** n


def vc_upper_scalar(n: int, m: int, k: int, ell_max: int) -> float:
    """
    VC-dimension upper bound for the sign-output concept class.

    2(2mn² + 4n + 1) log₂[8e (8mn²k(n+ℓ_max) + 1)(2nk + 2(1+2k)^n)],
    with the logarithm of the product taken as a sum of logarithms.
    """
    _check_dims(n, m, k, ell_max)
    parameters = 2 * m * n * n + 4 * n + 1
    return 2 * parameters * (LOG2_8E + _log2(degree_term(n, m, k, ell_max)) + _log2(piece_count(n, k)))


def vc_upper_scalar_zero_state(n: int, m: int, k: int, ell_max: int) -> float:
    """Same bound without the free output offset (zero initial state)."""
    _check_dims(n, m, k, ell_max)
    parameters = 2 * m * n * n + 4 * n
    return 2 * parameters * (LOG2_8E + _log2(degree_term(n, m, k, ell_max)) + _log2(piece_count(n, k)))


def vc_lower(n: int, k: int, variant: Rounding = Rounding.FLOOR) -> int:
    """max{m' round(log₂⌊k/m'⌋), m'} with m' = min(n, k)."""
    _require(n >= 1 and k >= 1, f"need n, k >= 1, got n={n}, k={k}")
    width = min(n, k)
    quotient = k // width
    if variant == Rounding.FLOOR:
        bits = quotient.bit_length() - 1
    else:
        bits = (quotient - 1).bit_length()
    return max(width * bits, width)


def vc_upper_vector(n: int, m: int, p: int, k: int, ell_max: int) -> float:
    """Bound for the p-output class with sign-vector outputs."""
    _check_dims(n, m, k, ell_max)
    _require(p >= 1, f"need p >= 1, got {p}")
    parameters = 2 * p * m * n * n + 4 * n + p
    pieces = 2 ** p - 1 + 2 * p * (2 * k + 1) ** n + 2 * n * k
    return 2 * parameters * (LOG2_8E + _log2(degree_term(n, m, k, ell_max)) + _log2(pieces))


def pd_upper(n: int, m: int, k: int, ell_max: int) -> float:
    """Pseudo-dimension bound of the real-valued loss class."""
    _check_dims(n, m, k, ell_max)
    parameters = 2 * m * n * n + 4 * n + 1
    return 2 * parameters * (LOG2_16E + _log2(degree_term(n, m, k, ell_max)) + _log2(piece_count(n, k)))


def lipschitz_constant(n: int, m: int, tau: float, M: float) -> float:
    """n² m τ^n e^τ M, or inf when it does not fit in a double."""
    log2_value = lipschitz_log2(n, m, tau, M)
    if log2_value > EXACT_LOG2_LIMIT:
        return math.inf
    try:
        value = n * n * m * tau ** n * math.exp(tau) * M
    except OverflowError:
        value = math.inf
    # a single factor can overflow while a small M keeps the product in range
    return value if math.isfinite(value) else 2.0 ** log2_value


def lipschitz_log2(n: int, m: int, tau: float, M: float) -> float:
    """log₂(n² m τ^n e^τ M) as a sum of logarithms; finite whenever the inputs are."""
    _require(tau >= 1.0 and M > 0, f"need tau >= 1 and M > 0, got tau={tau}, M={M}")
    return 2 * math.log2(n) + math.log2(m) + n * math.log2(tau) + tau * LOG2_E + math.log2(M)


def _rounded_log2(log2_scale: float, scale: float, gamma: float, rounding: Rounding) -> float:
    """
    log₂ of floor/ceil(scale / γ); 0 when the rounded value is below 2.

    Past 2^53 every double is an integer, so rounding is the identity and the
    result is log₂ scale − log₂ γ without forming the ratio.
    """
    log2_ratio = log2_scale - math.log2(gamma)
    if log2_ratio >= MANTISSA_BITS:
        return log2_ratio
    ratio = scale / gamma
    rounded = math.floor(ratio) if rounding == Rounding.FLOOR else math.ceil(ratio)
    if rounded <= 1:
        return 0.0
    return math.log2(rounded)


def fat_lipschitz(
    k: int, C: float, L: float, gamma: float, ball: Ball = Ball.OPEN_INF, log2_L: Optional[float] = None
) -> float:
    """
    Fat-shattering bound for a k-parameter class that is L-Lipschitz in its parameters.

    Args:
        k: Number of parameters.
        C: Radius of the parameter set.
        L: Lipschitz constant (may be inf when log2_L is given).
        gamma: Margin.
        ball: Shape of the parameter set.
        log2_L: log₂ L, used when L overflows a double.

    Returns:
        k log₂⌊CL/γ⌋ for the open sup-norm ball (0 once the floor is ≤ 1),
        k log₂(1 + ⌊CL/γ⌋) for the closed sup-norm ball and
        k log₂(C + L/γ) for the closed Euclidean ball.
    """
    _require(k >= 1, f"need k >= 1, got {k}")
    _require(C > 0 and L > 0 and gamma > 0, "C, L and gamma must be positive")
    if log2_L is None:
        _require(math.isfinite(L), "L overflows a double; pass log2_L")
        log2_L = math.log2(L)
    log2_scale = math.log2(C) + log2_L
    scale = C * L
    if ball == Ball.OPEN_INF:
        return k * _rounded_log2(log2_scale, scale, gamma, Rounding.FLOOR)
    if ball == Ball.CLOSED_INF:
        if log2_scale - math.log2(gamma) >= MANTISSA_BITS:
            return k * (log2_scale - math.log2(gamma))
        return k * math.log2(1 + math.floor(scale / gamma))
    return k * max(float(np.logaddexp2(math.log2(C), log2_L - math.log2(gamma))), 0.0)


def fat_control(
    n: int, m: int, tau: float, M: float, gamma: float, rounding: Rounding = Rounding.CEIL
) -> float:
    """n(m+1) log₂ round(n² m τ^n e^τ M / γ)."""
    _require(n >= 1 and m >= 1 and gamma > 0, "need n, m >= 1 and gamma > 0")
    log2_scale = lipschitz_log2(n, m, tau, M)
    scale = lipschitz_constant(n, m, tau, M)
    return n * (m + 1) * _rounded_log2(log2_scale, scale, gamma, rounding)


def fat_combined_branches(
    n: int, m: int, k: int, ell_max: int, tau: float, M: float, gamma: float,
    rounding: Rounding = Rounding.CEIL,
) -> Tuple[float, float]:
    """(margin-dependent branch, margin-free branch) of the combined fat-shattering bound."""
    _check_dims(n, m, k, ell_max)
    _require(gamma > 0, f"gamma must be positive, got {gamma}")
    log2_scale = lipschitz_log2(n, m, tau, M) + math.log2(k)
    scale = lipschitz_constant(n, m, tau, M) * k
    control = (m + 1) * n * _rounded_log2(log2_scale, scale, gamma, rounding)
    degree = n * m * k * 4 * (n + ell_max) + 1
    pseudo = 2 * (m + 4) * n * (LOG2_8E + _log2(degree) + _log2(piece_count(n, k)))
    return control, pseudo


def fat_combined(
    n: int, m: int, k: int, ell_max: int, tau: float, M: float, gamma: float,
    rounding: Rounding = Rounding.CEIL,
) -> float:
    return min(fat_combined_branches(n, m, k, ell_max, tau, M, gamma, rounding))


def fat_hyperplane(R: float, gamma: float, k: int) -> float:
    """min{9R²/γ², k+1} + 1."""
    _require(R > 0 and gamma > 0 and k >= 1, "need R, gamma > 0 and k >= 1")
    return min(9.0 * R * R / (gamma * gamma), k + 1.0) + 1.0


def gj_bound(ell: int, d: int, s: int) -> float:
    """2ℓ log₂(8eds) for ℓ parameters, degree d and s polynomials."""
    _require(ell >= 1 and d >= 1 and s >= 1, "ell, d and s must be >= 1")
    return gj_bound_log2(ell, _log2(d), _log2(s))


def gj_bound_log2(ell: int, log2_d: float, log2_s: float) -> float:
    """gj_bound with d and s given by their base-2 logarithms."""
    return 2 * ell * (LOG2_8E + log2_d + log2_s)


def rat_polynomial_count_log2(n: int, k: int, h_rat: int, d_rat: int) -> float:
    """log₂ of 2(8e d 2n²k h / 4n)^{4n} + 2n²k h."""
    expressions = 1.0 + 4 * n * (LOG2_8E + math.log2(d_rat) + math.log2(2 * n * n * k * h_rat) - math.log2(4 * n))
    return float(np.logaddexp2(expressions, math.log2(2 * n * n * k * h_rat)))


def rat_vc_abstract(n: int, m: int, k: int, h_rat: int, d_rat: int) -> float:
    """Goldberg-Jerrum bound under the abstract rationality conditions."""
    _require(min(n, m, k, h_rat, d_rat) >= 1, "n, m, k, h_rat and d_rat must be >= 1")
    ell = 2 * m * n * n + 4 * n
    degree = 2 * m * n * n * k * d_rat + 1
    return gj_bound_log2(ell, _log2(degree), rat_polynomial_count_log2(n, k, h_rat, d_rat))


def dmax_rat(n: int, ell_max: int) -> int:
    _require(n >= 1 and ell_max >= 0, "need n >= 1 and ell_max >= 0")
    return 4 * (n + ell_max)


def dual_vc_lower(vc_dual: int) -> int:
    """⌊log₂ vc_dual⌋."""
    _require(vc_dual >= 1, f"vc_dual must be >= 1, got {vc_dual}")
    return vc_dual.bit_length() - 1


def axis_shatter_bound(sizes: Iterable[int]) -> int:
    """Σ ⌊log₂ r_i⌋ over the axis sizes."""
    sizes = list(sizes)
    _require(bool(sizes) and all(r >= 1 for r in sizes), "axis sizes must be a non-empty list of integers >= 1")
    return sum(r.bit_length() - 1 for r in sizes)
