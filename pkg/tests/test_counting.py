"""Counting arguments, closed sums against explicit enumeration."""

import math

import pytest

from src.bounds import (
    CountMode,
    count_xi_basis,
    enumerate_pole_patterns,
    enumerate_xi_basis,
    pole_free_count,
    pole_free_count_binomial,
    sign_pattern_count,
    sign_pattern_count_log2,
    xi_basis_count,
)
from src.utils import BoundOverflowError, InvalidInputError


def test_pole_free_examples():
    assert pole_free_count(2, 2) == 25
    for k in range(1, 6):
        assert pole_free_count(1, k) == 2 * k + 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_pole_free_count_matches_enumeration(n, k):
    """(1+2k)^n, the binomial sum and brute-force pattern enumeration agree."""
    closed = pole_free_count(n, k)
    assert pole_free_count_binomial(n, k) == closed
    assert enumerate_pole_patterns(n, k) == closed


def test_pole_enumeration_limit():
    with pytest.raises(InvalidInputError):
        enumerate_pole_patterns(12, 5)


def test_sign_pattern_count_small():
    assert abs(sign_pattern_count(1, 1, 1) - 8 * math.e) < 1e-12
    assert abs(sign_pattern_count_log2(2, 3, 5) - 2 * math.log2(8 * math.e * 3 * 5 / 2)) < 1e-12


def test_sign_pattern_count_overflow():
    with pytest.raises(BoundOverflowError):
        sign_pattern_count(200, 10, 400)


def test_sign_pattern_count_needs_enough_polynomials():
    with pytest.raises(InvalidInputError):
        sign_pattern_count_log2(3, 2, 2)


def test_xi_basis_count_four():
    assert xi_basis_count(4) == 12
    assert count_xi_basis(4, CountMode.ENUMERATE) == 12


def test_xi_basis_modes_agree():
    for n in range(1, 65):
        closed = count_xi_basis(n, CountMode.CLOSED_SUM)
        assert count_xi_basis(n, CountMode.ENUMERATE) == closed, f"n={n}"


def test_xi_basis_count_is_below_full_count():
    """The count never exceeds 2n² and grows like n ln n."""
    for n in range(1, 65):
        count = xi_basis_count(n)
        assert count <= 2 * n * n, f"n={n}: {count}"
        assert count <= 1.5 * n * (math.log(n) + 2) + 1, f"n={n}: {count}"


def test_xi_basis_enumeration_is_sorted_and_distinct():
    functions = enumerate_xi_basis(6)
    assert functions == sorted(set(functions))
    assert {trig for _, _, trig in functions} == {"cos", "sin", "real"}


def test_counting_rejects_bad_sizes():
    with pytest.raises(InvalidInputError):
        pole_free_count(0, 1)
    with pytest.raises(InvalidInputError):
        xi_basis_count(0)
