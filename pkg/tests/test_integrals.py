"""
Closed-form exponential-trigonometric integrals against direct antiderivatives
and the adaptive quadrature oracle.
"""

import math

import numpy as np
import pytest

from src.integrals import (
    Branch,
    ExpTrigMonomial,
    Trig,
    closed_form_pair,
    evaluate_monomial,
    expand_xi_times_basis,
    integrate_monomial,
    integrate_quadrature,
    integrate_xi_times_basis,
    monomial_integrand,
    recursion_step,
    upward_recursion,
)
from src.systems import BasisFunction
from src.utils import IntegrationRangeError, InvalidInputError


def _monomial(power, rate, freq, phase):
    return ExpTrigMonomial(power=power, rate=rate, freq=freq, phase=phase)


@pytest.mark.parametrize(
    "power, rate, freq, phase, expected",
    [
        (0, 0.0, math.pi, Trig.SIN, 2.0 / math.pi),
        (0, 0.0, 0.0, Trig.SIN, 0.0),
        (1, 0.0, math.pi, Trig.SIN, 1.0 / math.pi),
        (0, 1.0, 1.0, Trig.SIN, (math.e * (math.sin(1.0) - math.cos(1.0)) + 1.0) / 2.0),
        (0, 1.0, 0.0, Trig.COS, math.e - 1.0),
        (2, 0.0, 0.0, Trig.COS, 1.0 / 3.0),
    ],
)
def test_monomial_known_values(power, rate, freq, phase, expected):
    """Hand-integrable monomials on [0, 1]."""
    result = integrate_monomial(_monomial(power, rate, freq, phase), 1.0)
    assert abs(result.value - expected) < 1e-13, f"got {result.value!r}, expected {expected!r}"


def test_zero_denominator_takes_degenerate_branch():
    result = integrate_monomial(_monomial(2, 0.0, 0.0, Trig.COS), 2.0)
    assert result.branch == Branch.DEGENERATE
    assert result.denom_magnitude == 0.0
    assert abs(result.value - 8.0 / 3.0) < 1e-14


def test_near_degenerate_falls_back_to_quadrature():
    """ã² + b̃² below the threshold but not zero: value still matches the series limit."""
    rate = 1e-5
    value, branch, denom = evaluate_monomial(2, rate, 0.0, Trig.COS, 1.0)
    expected = 1.0 / 3.0 + rate / 4.0 + rate * rate / 10.0
    assert branch == Branch.DEGENERATE
    assert denom <= 1e-8
    assert abs(value - expected) < 1e-10, f"near-degenerate value {value!r} vs {expected!r}"


def test_regular_branch_reports_denominator():
    result = integrate_monomial(_monomial(0, 3.0, 4.0, Trig.SIN), 1.0)
    assert result.branch == Branch.REGULAR
    assert abs(result.denom_magnitude - 25.0) < 1e-12


def test_closed_form_matches_quadrature_on_random_monomials():
    """Random (K, ã, b̃, phase, τ) against adaptive Gauss-Kronrod."""
    rng = np.random.default_rng(12345)
    for _ in range(200):
        power = int(rng.integers(0, 7))
        rate, freq = rng.uniform(-5.0, 5.0, size=2)
        phase = Trig.SIN if rng.integers(0, 2) else Trig.COS
        tau = float(rng.choice([0.5, 1.0, 2.0]))
        monomial = _monomial(power, float(rate), float(freq), phase)

        closed = integrate_monomial(monomial, tau).value
        reference = integrate_quadrature(monomial_integrand(monomial), tau)
        assert abs(closed - reference) <= 1e-8 + 1e-7 * abs(reference), (
            f"K={power} a={rate} b={freq} {phase.value} tau={tau}: {closed!r} vs {reference!r}"
        )


def test_series_region_agrees_with_recursion():
    """Both evaluation routes of the same closed form on a point where either is accurate."""
    series_sin, series_cos = closed_form_pair(3, 2.0, 3.0, 1.0)
    recursion_sin, recursion_cos = upward_recursion(3, 2.0, 3.0, 1.0)
    assert abs(series_sin - recursion_sin) < 1e-11 * max(1.0, abs(recursion_sin))
    assert abs(series_cos - recursion_cos) < 1e-11 * max(1.0, abs(recursion_cos))


def test_recursion_step_reproduces_next_power():
    """One K-step applied to the K−1 pair gives the K pair."""
    rate, freq, tau = -1.5, 6.0, 1.3
    for power in range(1, 6):
        previous = upward_recursion(power - 1, rate, freq, tau)
        stepped = recursion_step(power, rate, freq, tau, *previous)
        direct = upward_recursion(power, rate, freq, tau)
        for got, want in zip(stepped, direct):
            assert abs(got - want) < 1e-12 * max(1.0, abs(want)), f"K={power}: {got!r} vs {want!r}"


def test_recursion_step_needs_positive_power():
    with pytest.raises(InvalidInputError):
        recursion_step(0, 1.0, 1.0, 1.0, 0.0, 0.0)


@pytest.mark.parametrize(
    "power, rate, freq, tau",
    [
        (-1, 0.0, 1.0, 1.0),
        (0, 0.0, 1.0, 0.0),
        (0, 0.0, 1.0, -1.0),
        (0, float("nan"), 1.0, 1.0),
        (0, 0.0, float("inf"), 1.0),
    ],
)
def test_invalid_monomial_arguments(power, rate, freq, tau):
    with pytest.raises(InvalidInputError):
        evaluate_monomial(power, rate, freq, Trig.SIN, tau)


def test_exponent_overflow_is_reported():
    with pytest.raises(IntegrationRangeError):
        evaluate_monomial(0, 800.0, 1.0, Trig.COS, 1.0)


def test_quadrature_known_integrals():
    assert abs(integrate_quadrature(lambda t: 1.0, 1.0) - 1.0) < 1e-12
    assert abs(integrate_quadrature(lambda t: math.sin(math.pi * t), 1.0) - 2.0 / math.pi) < 1e-12


def test_quadrature_matches_closed_form_for_t_exp_sin():
    """∫_0^1 t e^t sin(3t) dt by both paths."""
    monomial = _monomial(1, 1.0, 3.0, Trig.SIN)
    closed = integrate_monomial(monomial, 1.0).value
    reference = integrate_quadrature(lambda t: t * math.exp(t) * math.sin(3.0 * t), 1.0)
    assert abs(closed - reference) < 1e-10


def test_quadrature_rejects_bad_tolerance():
    with pytest.raises(InvalidInputError):
        integrate_quadrature(lambda t: 1.0, 1.0, rel_tol=0.5)
    with pytest.raises(InvalidInputError):
        integrate_quadrature(lambda t: 1.0, 0.0)


def test_sine_squared_product():
    """ξ = sin(πt), ω = sin(πt): ∫ sin² = 1/2."""
    omega = BasisFunction(ell=0, alpha=0.0, beta=math.pi, kind=Trig.SIN)
    value = integrate_xi_times_basis(0, 0.0, math.pi, Trig.SIN, omega, 1.0)
    assert abs(value - 0.5) < 1e-13


def test_zero_frequency_sine_xi_vanishes():
    omega = BasisFunction(ell=1, alpha=0.3, beta=2.0, kind=Trig.COS)
    assert integrate_xi_times_basis(0, 0.0, 0.0, Trig.SIN, omega, 1.0) == 0.0


def test_expansion_merges_equal_frequencies():
    constant = BasisFunction(ell=0, alpha=0.0, beta=0.0, kind=Trig.COS)
    terms = expand_xi_times_basis(1, 0.5, 2.0, Trig.SIN, constant)
    assert len(terms) == 1
    coefficient, monomial = terms[0]
    assert coefficient == 1.0
    assert (monomial.power, monomial.rate, monomial.freq, monomial.phase) == (1, 0.5, 2.0, Trig.SIN)


def test_sine_squared_branches_follow_quadrature():
    """
    ∫_0^1 sin(bt) sin(ct) dt on both sides of b = c.

    At b = c the (b − c) term is degenerate and the result is (b − sin b cos b)/(2b).
    """
    b = 2.5
    for c in (b, 1.0, -b):
        omega = BasisFunction(ell=0, alpha=0.0, beta=c, kind=Trig.SIN)
        value = integrate_xi_times_basis(0, 0.0, b, Trig.SIN, omega, 1.0)
        reference = integrate_quadrature(lambda t: math.sin(b * t) * math.sin(c * t), 1.0)
        assert abs(value - reference) < 1e-11, f"c={c}: {value!r} vs {reference!r}"

    omega = BasisFunction(ell=0, alpha=0.0, beta=b, kind=Trig.SIN)
    same = integrate_xi_times_basis(0, 0.0, b, Trig.SIN, omega, 1.0)
    assert abs(same - (b - math.sin(b) * math.cos(b)) / (2 * b)) < 1e-13


@pytest.mark.parametrize(
    "power, rate, freq",
    [(0, 0.0, 1.3), (2, -0.7, 4.0), (3, 1.2, 0.25), (5, 0.4, 9.5), (1, -2.0, 30.0)],
)
def test_monomial_parity_in_frequency(power, rate, freq):
    """Sine terms are odd in the frequency, cosine terms even."""
    tau = 1.0
    sin_plus = integrate_monomial(_monomial(power, rate, freq, Trig.SIN), tau).value
    sin_minus = integrate_monomial(_monomial(power, rate, -freq, Trig.SIN), tau).value
    cos_plus = integrate_monomial(_monomial(power, rate, freq, Trig.COS), tau).value
    cos_minus = integrate_monomial(_monomial(power, rate, -freq, Trig.COS), tau).value
    scale = max(1.0, abs(sin_plus), abs(cos_plus))
    assert abs(sin_plus + sin_minus) < 1e-13 * scale
    assert abs(cos_plus - cos_minus) < 1e-13 * scale


def test_xi_times_basis_is_linear_in_the_basis_function():
    """c1 ∫ξω1 + c2 ∫ξω2 equals quadrature of ξ (c1 ω1 + c2 ω2)."""
    first = BasisFunction(ell=1, alpha=0.3, beta=2.0, kind=Trig.COS)
    second = BasisFunction(ell=0, alpha=-0.5, beta=0.0, kind=Trig.COS)
    l_xi, a, b = 2, -0.4, 1.7
    for trig in (Trig.SIN, Trig.COS):
        for c1, c2 in ((1.0, 0.0), (2.5, -1.25), (-0.3, 4.0)):
            combined = c1 * integrate_xi_times_basis(l_xi, a, b, trig, first, 1.0) + c2 * integrate_xi_times_basis(
                l_xi, a, b, trig, second, 1.0
            )
            xi_phase = math.sin if trig == Trig.SIN else math.cos
            reference = integrate_quadrature(
                lambda t: t**l_xi * math.exp(a * t) * xi_phase(b * t) * (c1 * first(t) + c2 * second(t)),
                1.0,
            )
            assert abs(combined - reference) < 1e-11, f"{trig} ({c1}, {c2}): {combined!r} vs {reference!r}"


def test_xi_times_basis_is_linear_in_the_expansion():
    omega = BasisFunction(ell=2, alpha=0.1, beta=3.0, kind=Trig.SIN)
    value = integrate_xi_times_basis(1, 0.6, 1.1, Trig.COS, omega, 1.0)
    terms = expand_xi_times_basis(1, 0.6, 1.1, Trig.COS, omega)
    expected = math.fsum(coefficient * integrate_monomial(monomial, 1.0).value for coefficient, monomial in terms)
    assert abs(value - expected) < 1e-14
