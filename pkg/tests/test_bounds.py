"""Dimension and sample-complexity calculators."""

import math

import pytest

from src.bounds import (
    Ball,
    FormulaId,
    ProblemDims,
    Rounding,
    axis_shatter_bound,
    dmax_rat,
    dual_vc_lower,
    fat_combined,
    fat_combined_branches,
    fat_control,
    fat_hyperplane,
    fat_lipschitz,
    gj_bound,
    invert_sample_complexity,
    lipschitz_constant,
    lipschitz_log2,
    pd_upper,
    rat_vc_abstract,
    registry,
    sample_complexity_agnostic,
    sample_complexity_agnostic_oform,
    sample_complexity_concept,
    vc_lower,
    vc_upper_scalar,
    vc_upper_scalar_zero_state,
    vc_upper_vector,
)
from src.bounds.sample import agnostic_readings, sample_complexity_agnostic_nested_log
from src.utils import InvalidInputError


def _close(value, expected, rel=1e-12):
    return abs(value - expected) <= rel * max(1.0, abs(expected))


def test_vc_upper_scalar_smallest_case():
    value = vc_upper_scalar(1, 1, 1, 0)
    expected = 14 * math.log2(8 * math.e * 9 * 8)
    assert _close(value, expected), f"{value!r} vs {expected!r}"


def test_vc_upper_dominates_lower_example():
    assert vc_lower(2, 8) == 4
    assert vc_upper_scalar(2, 1, 8, 0) >= 4


def test_vc_sandwich_grid():
    """Lower ≤ upper on n = 1..6, k = 1..64 for both roundings."""
    for n in range(1, 7):
        for k in range(1, 65):
            upper = vc_upper_scalar(n, 1, k, 0)
            for variant in Rounding:
                lower = vc_lower(n, k, variant)
                assert lower <= upper, f"n={n} k={k} {variant.value}: {lower} > {upper}"


@pytest.mark.parametrize(
    "n, k, variant, expected",
    [
        (2, 8, Rounding.FLOOR, 4),
        (1, 1, Rounding.FLOOR, 1),
        (5, 5, Rounding.FLOOR, 5),
        (5, 5, Rounding.CEIL, 5),
        (1, 9, Rounding.FLOOR, 3),
        (1, 9, Rounding.CEIL, 4),
        (2, 12, Rounding.FLOOR, 4),
        (2, 12, Rounding.CEIL, 6),
    ],
)
def test_vc_lower_values(n, k, variant, expected):
    assert vc_lower(n, k, variant) == expected


def test_vc_upper_grows_with_k_and_n():
    for k in range(1, 40):
        assert vc_upper_scalar(2, 1, k + 1, 1) > vc_upper_scalar(2, 1, k, 1)
    for n in range(1, 10):
        assert vc_upper_scalar(n + 1, 2, 3, 0) > vc_upper_scalar(n, 2, 3, 0)


def test_zero_state_and_vector_variants():
    scalar = vc_upper_scalar(3, 2, 4, 1)
    assert vc_upper_scalar_zero_state(3, 2, 4, 1) < scalar
    assert vc_upper_vector(3, 2, 1, 4, 1) > scalar
    assert math.isfinite(vc_upper_vector(1, 1, 1, 1, 0)) and vc_upper_vector(1, 1, 1, 1, 0) > 0
    assert vc_upper_vector(3, 2, 3, 4, 1) > vc_upper_vector(3, 2, 2, 4, 1)


def test_pseudo_dimension_bound():
    assert _close(pd_upper(1, 1, 1, 0), 14 * math.log2(16 * math.e * 9 * 8))


def test_pseudo_minus_vc_is_parameter_term():
    """The two bounds differ only in 8e vs 16e inside the logarithm."""
    for n, m, k, ell_max in [(1, 1, 1, 0), (3, 2, 5, 2), (6, 1, 20, 0)]:
        gap = pd_upper(n, m, k, ell_max) - vc_upper_scalar(n, m, k, ell_max)
        expected = 2 * (2 * m * n * n + 4 * n + 1)
        assert abs(gap - expected) < 1e-9 * expected, f"gap {gap!r} vs {expected}"


def test_dimension_inputs_are_checked():
    with pytest.raises(InvalidInputError):
        vc_upper_scalar(0, 1, 1, 0)
    with pytest.raises(InvalidInputError):
        vc_upper_scalar(1, 1, 1, -1)
    with pytest.raises(InvalidInputError):
        vc_lower(1, 0)


@pytest.mark.parametrize(
    "k, C, L, gamma, ball, expected",
    [
        (3, 1.0, 8.0, 1.0, Ball.OPEN_INF, 9.0),
        (1, 1.0, 1.0, 2.0, Ball.OPEN_INF, 0.0),
        (2, 1.0, 3.0, 1.0, Ball.CLOSED_INF, 4.0),
        (2, 1.0, 6.0, 2.0, Ball.CLOSED_L2, 4.0),
    ],
)
def test_fat_lipschitz_values(k, C, L, gamma, ball, expected):
    assert _close(fat_lipschitz(k, C, L, gamma, ball), expected)


def test_fat_control_unit_ratio():
    """γ = e makes n² m τ^n e^τ M / γ = 1, a zero bound under either rounding."""
    gamma = lipschitz_constant(1, 1, 1.0, 1.0)
    assert abs(gamma - math.e) < 1e-15
    assert fat_control(1, 1, 1.0, 1.0, gamma, Rounding.FLOOR) == 0.0
    assert fat_control(1, 1, 1.0, 1.0, gamma, Rounding.CEIL) == 0.0


def test_fat_control_value():
    gamma = 0.01
    expected = 1 * 2 * math.log2(math.ceil(math.e / gamma))
    assert _close(fat_control(1, 1, 1.0, 1.0, gamma), expected)


def test_fat_combined_picks_smaller_branch():
    control, pseudo = fat_combined_branches(2, 1, 3, 0, 1.0, 1.0, 0.05)
    assert fat_combined(2, 1, 3, 0, 1.0, 1.0, 0.05) == min(control, pseudo)


def test_fat_combined_tiny_margin_uses_margin_free_branch():
    control, pseudo = fat_combined_branches(1, 1, 1, 0, 1.0, 1.0, 1e-300)
    assert pseudo < control
    assert fat_combined(1, 1, 1, 0, 1.0, 1.0, 1e-300) == pseudo


def test_lipschitz_overflow_is_evaluated_in_log_space():
    assert lipschitz_constant(2, 1, 800.0, 1.0) == math.inf
    log2_scale = 2.0 + 2 * math.log2(800.0) + 800.0 * math.log2(math.e)
    assert _close(lipschitz_log2(2, 1, 800.0, 1.0), log2_scale)
    assert _close(fat_control(2, 1, 800.0, 1.0, 0.1), 2 * 2 * (log2_scale - math.log2(0.1)))


@pytest.mark.parametrize("tau, gamma", [(710.0, 0.1), (1.0, 1e-320)])
def test_overflowing_ratio_falls_back_to_margin_free_branch(tau, gamma):
    control, pseudo = fat_combined_branches(2, 1, 3, 0, tau, 1.0, gamma)
    assert math.isfinite(control)
    assert pseudo < control
    assert fat_combined(2, 1, 3, 0, tau, 1.0, gamma) == pseudo


def test_fat_lipschitz_takes_log_constant_when_it_overflows():
    value = fat_lipschitz(2, 1.0, math.inf, 1.0, Ball.CLOSED_L2, log2_L=2000.0)
    assert _close(value, 4000.0)
    assert _close(fat_lipschitz(1, 1.0, math.inf, 0.5, Ball.OPEN_INF, log2_L=2000.0), 2001.0)
    with pytest.raises(InvalidInputError):
        fat_lipschitz(1, 1.0, math.inf, 1.0)


def test_registry_reports_overflowing_lipschitz_constant():
    report = registry.evaluate(FormulaId.FAT_LIPSCHITZ, ProblemDims(n=2, tau=800.0, gamma=0.1))
    assert math.isfinite(report.value)
    assert report.inputs["L"] is None
    assert any("overflows" in note for note in report.notes)


@pytest.mark.parametrize(
    "R, gamma, k, expected",
    [
        (1.0, 3.0, 10, 2.0),
        (1.0, 1.0, 5, 7.0),
        (1.0, 1e-9, 4, 6.0),
    ],
)
def test_fat_hyperplane_values(R, gamma, k, expected):
    assert _close(fat_hyperplane(R, gamma, k), expected)


def test_concept_sample_complexity():
    value = sample_complexity_concept(10, 0.1, 0.05)
    expected = max(800 * math.log2(80 * math.e), 40 * math.log2(40))
    assert _close(value, expected)


def test_concept_sample_complexity_rejects_bad_accuracy():
    with pytest.raises(InvalidInputError):
        sample_complexity_concept(1, 0.0, 0.1)
    with pytest.raises(InvalidInputError):
        sample_complexity_concept(1, 0.1, 1.0)
    with pytest.raises(InvalidInputError):
        sample_complexity_concept(-1, 0.1, 0.1)


def test_agnostic_confidence_term():
    """Changing δ shifts every reading by (4/α²) ln(δ2/δ1) except the O-form."""
    d, alpha = 3.0, 0.05
    shift = (4 / alpha ** 2) * math.log(0.1 / 0.01)
    for formula in (sample_complexity_agnostic, sample_complexity_agnostic_nested_log):
        gap = formula(d, alpha, 0.01) - formula(d, alpha, 0.1)
        assert abs(gap - shift) < 1e-8 * formula(d, alpha, 0.01), f"{formula.__name__}: {gap} vs {shift}"


def test_agnostic_without_capacity_term():
    alpha, delta = 0.1, 0.05
    assert _close(sample_complexity_agnostic(0.0, alpha, delta), (4 / alpha ** 2) * math.log(8 / delta))
    assert _close(sample_complexity_agnostic_oform(0.0, alpha, delta), math.log(1 / delta) / alpha ** 2)


def test_agnostic_readings_are_ordered():
    readings = agnostic_readings(10.0, 0.05, 0.05)
    assert set(readings) == {"as_printed", "nested_log", "oform"}
    assert readings["as_printed"] > readings["nested_log"] > readings["oform"] > 0


def test_gj_bound_values():
    assert _close(gj_bound(6, 12, 8), 12 * math.log2(768 * math.e))
    assert _close(gj_bound(1, 1, 1), 2 * math.log2(8 * math.e))
    with pytest.raises(InvalidInputError):
        gj_bound(0, 1, 1)


def test_integer_helpers():
    assert dual_vc_lower(1) == 0
    assert dual_vc_lower(8) == 3
    assert dual_vc_lower(9) == 3
    assert axis_shatter_bound([4, 4]) == 4
    assert axis_shatter_bound([1, 1, 1]) == 0
    assert axis_shatter_bound([3, 5]) == 3
    assert dmax_rat(1, 0) == 4
    assert dmax_rat(2, 3) == 20
    with pytest.raises(InvalidInputError):
        axis_shatter_bound([])


def test_dmax_feeds_the_degree_slot():
    """8 m n² k (n + ℓ_max) equals 2 m n² k dmax_rat(n, ℓ_max)."""
    for n, m, k, ell_max in [(1, 1, 1, 0), (3, 2, 5, 1), (4, 1, 7, 3)]:
        assert 8 * m * n * n * k * (n + ell_max) == 2 * m * n * n * k * dmax_rat(n, ell_max)


def test_abstract_rationality_bound_is_finite():
    value = rat_vc_abstract(1, 1, 1, 1, 4)
    assert math.isfinite(value) and value > 0
    assert rat_vc_abstract(2, 1, 3, 2, 8) > rat_vc_abstract(1, 1, 3, 2, 8)


def test_invert_sample_complexity_round_trip():
    d, delta = 12.0, 0.05
    for s in (5_000, 50_000, 1_000_000):
        eps = invert_sample_complexity(d, s, delta)
        assert 0 < eps < 1
        assert abs(sample_complexity_concept(d, eps, delta) - s) < 1e-6 * s, f"s={s}, eps={eps}"


def test_invert_sample_complexity_is_monotone():
    values = [invert_sample_complexity(5.0, s, 0.05) for s in (1_000, 10_000, 100_000)]
    assert values[0] > values[1] > values[2]


def test_invert_sample_complexity_vacuous():
    assert invert_sample_complexity(50.0, 10, 0.05) == 1.0
    assert invert_sample_complexity(1.0, 0, 0.05) == 1.0
