"""Closed-form integrals of t^K e^{at} sin|cos(bt) over [0, tau]."""

import math
from typing import Tuple

from ..utils import INTEGRATION, IntegrationRangeError, InvalidInputError, get_logger
from .models import Branch, ExpTrigMonomial, IntegralResult, Trig
from .quadrature import integrate_quadrature, monomial_integrand

logger = get_logger(__name__)


def integrate_monomial(monomial: ExpTrigMonomial, tau: float) -> IntegralResult:
    """
    Integrate one exponential-trigonometric monomial over [0, tau].

    The regular branch is the closed form obtained by integration by parts. The
    degenerate branch (rate² + freq² at or below the threshold) returns the exact
    polynomial limit when rate and freq are both zero and falls back to quadrature
    otherwise.

    Args:
        monomial: The term t^K e^{rate t} sin|cos(freq t).
        tau: Right end of the interval.

    Returns:
        IntegralResult with the value, the branch taken and rate² + freq².
    """
    value, branch, denom = evaluate_monomial(
        monomial.power, monomial.rate, monomial.freq, monomial.phase, tau
    )
    return IntegralResult(value=value, branch=branch, denom_magnitude=denom)


def evaluate_monomial(
    power: int,
    rate: float,
    freq: float,
    phase: Trig,
    tau: float,
) -> Tuple[float, Branch, float]:
    """Unboxed variant of integrate_monomial for inner loops."""
    _check_arguments(power, rate, freq, tau)
    denom = rate * rate + freq * freq

    if denom <= INTEGRATION["degenerate_threshold"]:
        return _degenerate(power, rate, freq, phase, tau), Branch.DEGENERATE, denom

    sin_part, cos_part = closed_form_pair(power, rate, freq, tau)
    return (sin_part if phase == Trig.SIN else cos_part), Branch.REGULAR, denom


def closed_form_pair(power: int, rate: float, freq: float, tau: float) -> Tuple[float, float]:
    """
    Return (∫ t^K e^{at} sin(bt), ∫ t^K e^{at} cos(bt)) over [0, tau] for a² + b² > 0.

    Power series when |a + ib|·tau < K + series_margin, upward recursion otherwise.
    """
    if math.hypot(rate, freq) * tau < power + INTEGRATION["series_margin"]:
        return _power_series(power, rate, freq, tau)
    return upward_recursion(power, rate, freq, tau)


def upward_recursion(power: int, rate: float, freq: float, tau: float) -> Tuple[float, float]:
    """
    Integration-by-parts recursion in K.

    K = 0:
        S_0 = [e^{aτ}(a sin bτ − b cos bτ) + b] / (a² + b²)
        C_0 = [e^{aτ}(a cos bτ + b sin bτ) − a] / (a² + b²)
    K > 0:
        S_K = [τ^K e^{aτ}(a sin bτ − b cos bτ) − K(a S_{K−1} − b C_{K−1})] / (a² + b²)
        C_K = [τ^K e^{aτ}(a cos bτ + b sin bτ) − K(a C_{K−1} + b S_{K−1})] / (a² + b²)
    """
    denom = rate * rate + freq * freq
    growth = math.exp(rate * tau)
    sin_bt, cos_bt = math.sin(freq * tau), math.cos(freq * tau)
    edge_sin = growth * (rate * sin_bt - freq * cos_bt)
    edge_cos = growth * (rate * cos_bt + freq * sin_bt)

    i_sin = math.fsum((edge_sin, freq)) / denom
    i_cos = math.fsum((edge_cos, -rate)) / denom

    scale = 1.0
    for k in range(1, power + 1):
        scale *= tau
        i_sin, i_cos = (
            math.fsum((scale * edge_sin, -k * rate * i_sin, k * freq * i_cos)) / denom,
            math.fsum((scale * edge_cos, -k * rate * i_cos, -k * freq * i_sin)) / denom,
        )
    return i_sin, i_cos


def recursion_step(
    power: int,
    rate: float,
    freq: float,
    tau: float,
    previous_sin: float,
    previous_cos: float,
) -> Tuple[float, float]:
    """Apply one K-step of the recursion to externally supplied K−1 integrals."""
    if power < 1:
        raise InvalidInputError("recursion_step needs power >= 1")
    denom = rate * rate + freq * freq
    growth = tau ** power * math.exp(rate * tau)
    sin_bt, cos_bt = math.sin(freq * tau), math.cos(freq * tau)
    boundary_sin = growth * (rate * sin_bt - freq * cos_bt)
    boundary_cos = growth * (rate * cos_bt + freq * sin_bt)
    return (
        (boundary_sin - power * (rate * previous_sin - freq * previous_cos)) / denom,
        (boundary_cos - power * (rate * previous_cos + freq * previous_sin)) / denom,
    )


def _power_series(power: int, rate: float, freq: float, tau: float) -> Tuple[float, float]:
    # ∫_0^τ t^K e^{zt} dt = τ^{K+1} Σ_j (zτ)^j / (j! (K + j + 1))
    z_tau = complex(rate, freq) * tau
    radius = abs(z_tau)
    term = 1.0 + 0.0j
    total = term / (power + 1)
    for j in range(1, INTEGRATION["series_max_terms"]):
        term *= z_tau / j
        contribution = term / (power + j + 1)
        total += contribution
        if j > radius and abs(contribution) <= 1e-17 * max(abs(total), 1e-300):
            break
    value = total * tau ** (power + 1)
    return value.imag, value.real


def _degenerate(power: int, rate: float, freq: float, phase: Trig, tau: float) -> float:
    if rate == 0.0 and freq == 0.0:
        return 0.0 if phase == Trig.SIN else tau ** (power + 1) / (power + 1)

    logger.debug("Near-degenerate monomial, using quadrature", power=power, rate=rate, freq=freq)
    monomial = ExpTrigMonomial(power=power, rate=rate, freq=freq, phase=phase)
    return integrate_quadrature(monomial_integrand(monomial), tau)


def _check_arguments(power: int, rate: float, freq: float, tau: float) -> None:
    if power < 0:
        raise InvalidInputError(f"power must be >= 0, got {power}")
    if not (math.isfinite(rate) and math.isfinite(freq)):
        raise InvalidInputError(f"rate and freq must be finite, got ({rate}, {freq})")
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidInputError(f"tau must be a positive finite number, got {tau}")
    if rate * tau > INTEGRATION["max_exponent"]:
        raise IntegrationRangeError(f"e^(rate*tau) overflows: rate*tau = {rate * tau:.6g}")
