"""Sample complexity formulas and their inversion."""

import math
from typing import Dict

from scipy import optimize

from ..utils import InvalidInputError, get_logger

logger = get_logger(__name__)

AGNOSTIC_GROUPING = "(4/a^2)*((6d/ln2)*ln(7/a)*((336e/(a^3 ln2))*ln(7/a)) + ln(8/delta))"


def _check_unit(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise InvalidInputError(f"{name} must lie in (0, 1), got {value}")


def sample_complexity_concept(d: float, eps: float, delta: float) -> float:
    """max{(8d/ε) log₂(8e/ε), (4/ε) log₂(2/δ)} examples for PAC concept learning."""
    if d < 0:
        raise InvalidInputError(f"d must be >= 0, got {d}")
    _check_unit("eps", eps)
    _check_unit("delta", delta)
    return max((8.0 * d / eps) * math.log2(8.0 * math.e / eps), (4.0 / eps) * math.log2(2.0 / delta))


def sample_complexity_agnostic(d: float, alpha: float, delta: float) -> float:
    """
    Proper agnostic sample complexity from a fat-shattering value d.

    Evaluated with the grouping in AGNOSTIC_GROUPING, so the d-term carries
    the product of the two logarithmic factors.
    """
    if d < 0:
        raise InvalidInputError(f"d must be >= 0, got {d}")
    _check_unit("alpha", alpha)
    _check_unit("delta", delta)
    log_term = math.log(7.0 / alpha)
    inner = (336.0 * math.e / (alpha ** 3 * math.log(2.0))) * log_term
    return (4.0 / alpha ** 2) * ((6.0 * d / math.log(2.0)) * log_term * inner + math.log(8.0 / delta))


def sample_complexity_agnostic_nested_log(d: float, alpha: float, delta: float) -> float:
    """The alternative reading with a logarithm around the 336e factor."""
    _check_unit("alpha", alpha)
    _check_unit("delta", delta)
    log_term = math.log(7.0 / alpha)
    inner = math.log((336.0 * math.e / (alpha ** 3 * math.log(2.0))) * log_term)
    return (4.0 / alpha ** 2) * ((6.0 * d / math.log(2.0)) * log_term * inner + math.log(8.0 / delta))


def sample_complexity_agnostic_oform(d: float, alpha: float, delta: float) -> float:
    """(1/α²)(d ln²(1/α) + ln(1/δ)), natural logarithms."""
    _check_unit("alpha", alpha)
    _check_unit("delta", delta)
    return (d * math.log(1.0 / alpha) ** 2 + math.log(1.0 / delta)) / alpha ** 2


def agnostic_readings(d: float, alpha: float, delta: float) -> Dict[str, float]:
    return {
        "as_printed": sample_complexity_agnostic(d, alpha, delta),
        "nested_log": sample_complexity_agnostic_nested_log(d, alpha, delta),
        "oform": sample_complexity_agnostic_oform(d, alpha, delta),
    }


def invert_sample_complexity(d: float, s: float, delta: float, floor: float = 1e-12) -> float:
    """
    Smallest ε with sample_complexity_concept(d, ε, δ) ≤ s.

    Args:
        d: VC dimension.
        s: Available sample size.
        delta: Confidence parameter.
        floor: Smallest ε considered.

    Returns:
        The accuracy ε, or 1.0 when no ε < 1 is certified by s examples.
    """
    if s <= 0:
        return 1.0
    _check_unit("delta", delta)

    def excess(eps: float) -> float:
        return sample_complexity_concept(d, eps, delta) - s

    upper = math.nextafter(1.0, 0.0)
    if excess(upper) > 0:
        return 1.0
    if excess(floor) <= 0:
        return floor
    eps = optimize.brentq(excess, floor, upper, xtol=1e-14, rtol=1e-12, maxiter=500)
    logger.debug("Inverted sample complexity", d=d, s=s, eps=eps)
    return float(eps)
