"""
Integration tests: fixed-step RK4 oracle.

Tests verify:
- RK4 reproduces scalar solutions to high accuracy
- the oscillator realization matches the closed-form indicator-control output
- invalid step counts and divergence are reported
"""

import math

import numpy as np
import pytest

from src.shattering import IndicatorControl, section7_output, section7_rk4_output
from src.systems import LinearRealization, oracle_rk4, oscillator_realization
from src.utils import InvalidInputError, SimulationDivergedError


def test_rk4_constant_state():
    """ẋ = 0 keeps the initial value."""
    realization = LinearRealization(A=[[0.0]], B=[0.0], C=[1.0], x0=[2.5])
    assert oracle_rk4(realization, lambda t: 0.0, 1.0, 100) == 2.5


def test_rk4_exponential_growth():
    """ẋ = x, x(0) = 1 reaches e at τ = 1."""
    realization = LinearRealization(A=[[1.0]], B=[0.0], C=[1.0], x0=[1.0])
    value = oracle_rk4(realization, lambda t: 0.0, 1.0, 10_000)
    assert abs(value - math.e) < 1e-10, f"RK4 error too large: {abs(value - math.e)}"


def test_rk4_order_convergence():
    """Halving the step divides the error by roughly 2^4."""
    realization = LinearRealization(A=[[-2.0]], B=[1.0], C=[1.0])
    u = math.cos
    exact = (2.0 * math.cos(1.0) + math.sin(1.0) - 2.0 * math.exp(-2.0)) / 5.0

    coarse = abs(oracle_rk4(realization, u, 1.0, 100) - exact)
    fine = abs(oracle_rk4(realization, u, 1.0, 200) - exact)
    ratio = coarse / fine
    assert 12.0 < ratio < 20.0, f"convergence ratio {ratio}"


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("lam", [0.5, 2.0, 3.0 * math.pi, 12.0, 20.0])
def test_oscillator_matches_indicator_output(k, lam):
    """
    ẍ = −λ² x + ω_i with zero initial state gives x(1) = section7_output(ω_i, λ)/λ,
    so the declared output y = −x(1) is its negative.
    """
    for ctrl in IndicatorControl.family(k):
        reference = -section7_output(ctrl, lam) / lam
        simulated = section7_rk4_output(ctrl, lam, steps=5000)
        assert abs(simulated - reference) <= 1e-6 * abs(reference) + 1e-11, (
            f"k={k} i={ctrl.index} lambda={lam}: RK4 {simulated!r} vs closed form {reference!r}"
        )


def test_oscillator_shape():
    realization = oscillator_realization(3.0)
    np.testing.assert_array_equal(realization.A, [[0.0, 1.0], [-9.0, 0.0]])
    np.testing.assert_array_equal(realization.C, [-1.0, 0.0])


def test_rk4_rejects_too_few_steps():
    realization = LinearRealization(A=[[0.0]], B=[0.0], C=[1.0])
    with pytest.raises(InvalidInputError):
        oracle_rk4(realization, lambda t: 0.0, 1.0, 10)


def test_rk4_reports_divergence():
    realization = LinearRealization(A=[[5000.0]], B=[0.0], C=[1.0], x0=[1.0])
    with pytest.raises(SimulationDivergedError):
        oracle_rk4(realization, lambda t: 0.0, 1.0, 100)


def test_realization_shapes_are_checked():
    with pytest.raises(InvalidInputError):
        LinearRealization(A=[[0.0, 1.0], [0.0, 0.0]], B=[1.0], C=[1.0, 0.0])


def _random_oscillator_cases(count, seed):
    rng = np.random.default_rng(seed)
    cases = []
    for _ in range(count):
        k = int(rng.integers(2, 5))
        index = int(rng.integers(1, k + 1))
        lam = float(rng.uniform(0.1, 12.0))
        cases.append((k, index, lam))
    return cases


@pytest.mark.parametrize("k, index, lam", _random_oscillator_cases(20, seed=41))
def test_oscillator_matches_indicator_output_at_random_frequencies(k, index, lam):
    ctrl = IndicatorControl(index=index, k_total=k)
    reference = -section7_output(ctrl, lam) / lam
    simulated = section7_rk4_output(ctrl, lam, steps=5000)
    assert abs(simulated - reference) <= 1e-6 * abs(reference) + 1e-10, (
        f"k={k} i={index} lambda={lam}: RK4 {simulated!r} vs closed form {reference!r}"
    )
