"""Adaptive quadrature oracle used to cross-check the closed forms."""

import math
from typing import Callable, Optional

from scipy import integrate

from ..utils import INTEGRATION, InvalidInputError, QuadratureConvergenceError, get_logger
from .models import ExpTrigMonomial, Trig

logger = get_logger(__name__)


def integrate_quadrature(
    integrand: Callable[[float], float],
    tau: float,
    rel_tol: float = INTEGRATION["quad_rel_tol"],
    limit: Optional[int] = None,
) -> float:
    """
    Integrate a real function over [0, tau] with adaptive Gauss-Kronrod quadrature.

    Args:
        integrand: Callable evaluated at points of [0, tau]; must be finite there.
        tau: Upper limit of integration.
        rel_tol: Requested relative tolerance, in (0, 1e-2].
        limit: Subdivision budget; defaults to INTEGRATION["quad_limit"].

    Returns:
        The integral estimate.

    Raises:
        InvalidInputError: tau or rel_tol out of range.
        QuadratureConvergenceError: the subdivision budget was exhausted before the
            error estimate met the tolerance.
    """
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidInputError(f"tau must be a positive finite number, got {tau}")
    if not (0 < rel_tol <= INTEGRATION["max_rel_tol"]):
        raise InvalidInputError(f"rel_tol must lie in (0, {INTEGRATION['max_rel_tol']}], got {rel_tol}")

    abs_tol = INTEGRATION["quad_abs_tol"]
    result = integrate.quad(
        integrand,
        0.0,
        tau,
        epsabs=abs_tol,
        epsrel=rel_tol,
        limit=limit or INTEGRATION["quad_limit"],
        full_output=1,
    )
    value, abserr = float(result[0]), float(result[1])

    if not math.isfinite(value):
        raise QuadratureConvergenceError(f"quadrature produced a non-finite value on [0, {tau}]")

    if len(result) > 3:
        # quad flagged trouble; accept only a round-off plateau close to the target
        tolerance = max(abs_tol, rel_tol * abs(value))
        if abserr > 100 * tolerance:
            raise QuadratureConvergenceError(
                f"quadrature did not converge (error estimate {abserr:.3e}): {result[3]}"
            )
        logger.debug("Quadrature round-off plateau accepted", abserr=abserr, value=value)

    return value


def monomial_integrand(monomial: ExpTrigMonomial) -> Callable[[float], float]:
    """Pointwise evaluator of t^K e^{at} sin|cos(bt)."""
    power, rate, freq = monomial.power, monomial.rate, monomial.freq
    trig = math.sin if monomial.phase == Trig.SIN else math.cos

    def integrand(t: float) -> float:
        return t ** power * math.exp(rate * t) * trig(freq * t)

    return integrand
