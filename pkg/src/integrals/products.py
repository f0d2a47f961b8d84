"""Integrals of ξ-function times basis-function products via product-to-sum."""

import math
from typing import List, Protocol, Tuple

from .models import ExpTrigMonomial, Trig
from .monomial import evaluate_monomial


class BasisLike(Protocol):
    """Anything shaped like t^ell e^{alpha t} sin|cos(beta t)."""
    ell: int
    alpha: float
    beta: float
    kind: Trig


# (ξ trig, ω trig) -> ((coefficient, sign of β in b ± β, resulting trig), ...)
PRODUCT_TO_SUM = {
    # sin(bt) sin(βt) = [cos((b−β)t) − cos((b+β)t)] / 2
    (Trig.SIN, Trig.SIN): ((0.5, -1, Trig.COS), (-0.5, 1, Trig.COS)),
    # sin(bt) cos(βt) = [sin((b+β)t) + sin((b−β)t)] / 2
    (Trig.SIN, Trig.COS): ((0.5, 1, Trig.SIN), (0.5, -1, Trig.SIN)),
    # cos(bt) sin(βt) = [sin((b+β)t) − sin((b−β)t)] / 2
    (Trig.COS, Trig.SIN): ((0.5, 1, Trig.SIN), (-0.5, -1, Trig.SIN)),
    # cos(bt) cos(βt) = [cos((b−β)t) + cos((b+β)t)] / 2
    (Trig.COS, Trig.COS): ((0.5, -1, Trig.COS), (0.5, 1, Trig.COS)),
}


def expand_xi_times_basis(
    l_xi: int,
    a: float,
    b: float,
    trig: Trig,
    omega: BasisLike,
) -> List[Tuple[float, ExpTrigMonomial]]:
    """
    Expand t^{l_xi} e^{at} trig(bt) · ω(t) into at most two monomials.

    Terms with equal frequency are merged and zero coefficients dropped, so a
    β = 0 basis function yields a single monomial (or none for sin·sin).
    """
    power = l_xi + omega.ell
    rate = a + omega.alpha
    merged: dict = {}
    for coefficient, sign, phase in PRODUCT_TO_SUM[(trig, omega.kind)]:
        key = (b + sign * omega.beta, phase)
        merged[key] = merged.get(key, 0.0) + coefficient

    return [
        (coefficient, ExpTrigMonomial(power=power, rate=rate, freq=freq, phase=phase))
        for (freq, phase), coefficient in merged.items()
        if coefficient != 0.0
    ]


def integrate_xi_times_basis(
    l_xi: int,
    a: float,
    b: float,
    trig: Trig,
    omega: BasisLike,
    tau: float,
) -> float:
    """∫_0^tau t^{l_xi} e^{at} trig(bt) ω(t) dt."""
    return xi_basis_value(l_xi, a, b, trig, omega.ell, omega.alpha, omega.beta, omega.kind, tau)


def xi_basis_value(
    l_xi: int,
    a: float,
    b: float,
    trig: Trig,
    ell: int,
    alpha: float,
    beta: float,
    kind: Trig,
    tau: float,
) -> float:
    """Unboxed integrate_xi_times_basis for the response and search loops."""
    power = l_xi + ell
    rate = a + alpha
    rules = PRODUCT_TO_SUM[(trig, kind)]

    if beta == 0.0:
        coefficient = rules[0][0] + rules[1][0]
        if coefficient == 0.0:
            return 0.0
        value, _, _ = evaluate_monomial(power, rate, b, rules[0][2], tau)
        return coefficient * value

    terms = []
    for coefficient, sign, phase in rules:
        value, _, _ = evaluate_monomial(power, rate, b + sign * beta, phase, tau)
        terms.append(coefficient * value)
    return math.fsum(terms)
