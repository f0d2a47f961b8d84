"""Indicator-control shattering of the oscillator family."""

import math

import numpy as np
import pytest

from src.shattering import (
    IndicatorControl,
    Section7Construction,
    ShatterStatus,
    constructions,
    section7_lambda,
    section7_normalized,
    section7_output,
    section7_output_cosines,
    verify_section7,
)
from src.shattering.section7 import subset_pattern_table
from src.utils import InvalidInputError, PrecisionLimitError


def test_lambda_of_subsets():
    assert section7_lambda([]) == 0.0
    assert abs(section7_lambda([1]) - 2 * math.pi) < 1e-15
    assert abs(section7_lambda([1, 2]) - 6 * math.pi) < 1e-15
    assert section7_lambda([2, 2, 1]) == section7_lambda([1, 2])


def test_indicator_intervals():
    ctrl = IndicatorControl(index=2, k_total=3)
    assert ctrl.alpha == -8
    assert ctrl.interval == (0.25, 0.25 + 2 ** -8)
    assert ctrl.breakpoints == (1 - 0.25 - 2 ** -8, 0.75)
    assert ctrl.control_value(0.748) == 1.0
    assert ctrl.control_value(0.5) == 0.0


def test_output_vanishes_at_zero_frequency():
    ctrl = IndicatorControl(index=1, k_total=2)
    assert section7_output(ctrl, 0.0) == 0.0
    a, b = ctrl.interval
    assert section7_normalized(ctrl, 0.0) == (b * b - a * a) / 2


def test_negative_frequency_is_rejected():
    with pytest.raises(InvalidInputError):
        section7_output(IndicatorControl(index=1, k_total=1), -1.0)


def test_product_and_cosine_forms_agree():
    """Both closed forms of ∫_a^b sin(λs) ds on well-conditioned frequencies."""
    rng = np.random.default_rng(3)
    for k in (2, 3, 4):
        for ctrl in IndicatorControl.family(k):
            for lam in rng.uniform(0.5, 10.0, size=10):
                product = section7_output(ctrl, lam)
                cosines = section7_output_cosines(ctrl, lam)
                assert abs(product - cosines) <= 1e-6 * abs(product) + 1e-12, (
                    f"k={k} i={ctrl.index} lambda={lam}: {product!r} vs {cosines!r}"
                )


def test_normalized_limit_is_continuous():
    ctrl = IndicatorControl(index=1, k_total=1)
    assert abs(section7_normalized(ctrl, 1e-6) - section7_normalized(ctrl, 0.0)) < 1e-10


@pytest.mark.parametrize("k", range(1, 9))
def test_shattering_is_complete(k):
    report = verify_section7(k)
    assert report.complete, f"k={k}: {len(report.patterns_found)}/{2 ** k}, failures {report.failures}"
    assert report.status == ShatterStatus.COMPLETE
    assert report.indeterminate_count == 0
    assert report.certified_lower_bound == float(k)
    assert len(report.patterns_found) == 2 ** k


def test_pattern_is_complement_of_subset():
    """Control i is labelled 1 exactly when i is not in J."""
    table = subset_pattern_table(3)
    for mask in range(8):
        expected = [1 - ((mask >> (i - 1)) & 1) for i in range(1, 4)]
        assert table[mask].tolist() == expected, f"mask {mask}"

    report = verify_section7(3)
    assert report.witnesses["101"]["subset"] == [2]


def test_witnesses_re_evaluate():
    construction = Section7Construction(5)
    report = construction.run()
    assert construction.verify_witnesses(report) == []


def test_registry_creates_the_construction():
    construction = constructions.create("section7", k=2)
    assert isinstance(construction, Section7Construction)
    assert construction.run().complete


def test_precision_limit():
    with pytest.raises(PrecisionLimitError):
        Section7Construction(9)
    with pytest.raises(PrecisionLimitError):
        verify_section7(40)
    with pytest.raises(InvalidInputError):
        Section7Construction(0)


def test_huge_guard_makes_subsets_indeterminate():
    report = verify_section7(3, min_magnitude_guard=1e30)
    assert not report.complete
    assert report.status == ShatterStatus.INDETERMINATE
    assert report.indeterminate_count > 0
    assert report.certified_lower_bound is None
