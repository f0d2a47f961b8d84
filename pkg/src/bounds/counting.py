"""Counting arguments: sign patterns, pole-free pieces and ξ basis sizes."""

import itertools
import math
from math import comb
from typing import FrozenSet, List, Set, Tuple

from ..utils import BoundOverflowError, InvalidInputError
from .dimensions import LOG2_8E
from .models import CountMode

ENUMERATION_LIMIT = 2_000_000


def sign_pattern_count_log2(n_vars: int, d: int, m_polys: int) -> float:
    """log₂ of ((8 e d m) / n)^n."""
    if min(n_vars, d, m_polys) < 1:
        raise InvalidInputError("n_vars, d and m_polys must be >= 1")
    if n_vars > m_polys:
        raise InvalidInputError(f"n_vars ({n_vars}) must not exceed m_polys ({m_polys})")
    return n_vars * (LOG2_8E + math.log2(d) + math.log2(m_polys) - math.log2(n_vars))


def sign_pattern_count(n_vars: int, d: int, m_polys: int) -> float:
    """Warren-type bound on the number of sign vectors of m_polys degree-d polynomials."""
    log2_value = sign_pattern_count_log2(n_vars, d, m_polys)
    if log2_value >= 1024:
        raise BoundOverflowError(f"sign pattern count 2^{log2_value:.6g} exceeds double range")
    return (8.0 * math.e * d * m_polys / n_vars) ** n_vars


def pole_free_count(n: int, k: int) -> int:
    """(1 + 2k)^n pole-free piece selections."""
    if n < 1 or k < 1:
        raise InvalidInputError(f"need n, k >= 1, got n={n}, k={k}")
    return (1 + 2 * k) ** n


def pole_free_count_binomial(n: int, k: int) -> int:
    """Σ_γ (2k)^γ C(n, γ)."""
    if n < 1 or k < 1:
        raise InvalidInputError(f"need n, k >= 1, got n={n}, k={k}")
    return sum((2 * k) ** g * comb(n, g) for g in range(n + 1))


def _synthetic_zero(j: int, sign: int) -> Tuple[int, int]:
    # f_{j,±}(x1, x2) = (x1 + j)² + (x2 ± j)² vanishes at (-j, ∓j)
    return (-j, -sign * j)


def enumerate_pole_patterns(n: int, k: int) -> int:
    """
    Count distinct vanishing patterns of the 2nk pole polynomials by brute force.

    Basis element j has α_j = β_j = j, so each row's 2k polynomials vanish at
    2k distinct points; every row tries those points and one generic point.
    """
    if n < 1 or k < 1:
        raise InvalidInputError(f"need n, k >= 1, got n={n}, k={k}")
    candidates = [(0, 0)] + [_synthetic_zero(j, sign) for j in range(1, k + 1) for sign in (1, -1)]
    if len(candidates) ** n > ENUMERATION_LIMIT:
        raise InvalidInputError(f"enumeration of {len(candidates)}^{n} points exceeds {ENUMERATION_LIMIT}")

    patterns: Set[FrozenSet[Tuple[int, int, int]]] = set()
    for rows in itertools.product(candidates, repeat=n):
        zeros = frozenset(
            (row, j, sign)
            for row, (x1, x2) in enumerate(rows)
            for j in range(1, k + 1)
            for sign in (1, -1)
            if (x1 + j) ** 2 + (x2 + sign * j) ** 2 == 0
        )
        patterns.add(zeros)
    return len(patterns)


def xi_basis_count(n: int) -> int:
    """Σ⌊n/2i⌋ + Σ⌊n/i⌋ + ⌊n/2⌋ + 1 over i = 1..⌊n/2⌋."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    half = n // 2
    return sum(n // (2 * i) for i in range(1, half + 1)) + sum(n // i for i in range(1, half + 1)) + half + 1


def enumerate_xi_basis(n: int) -> List[Tuple[int, int, str]]:
    """
    The functions needed to express e^{At} for any real n x n matrix.

    Each function is a (power, eigenvalue slot, trig) triple. Complex slot i
    carries cos/sin terms up to power ⌊n/2i⌋ - 1 and real terms from there up
    to ⌊n/i⌋ - 1; ⌊n/2⌋ + 1 further slots hold a single real exponential.
    """
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    half = n // 2
    functions: Set[Tuple[int, int, str]] = set()
    for slot in range(1, half + 1):
        oscillating = n // (2 * slot)
        for power in range(oscillating):
            functions.add((power, slot, "cos"))
            functions.add((power, slot, "sin"))
        for power in range(oscillating, n // slot):
            functions.add((power, slot, "real"))
    for extra in range(half + 1):
        functions.add((0, half + 1 + extra, "real"))
    return sorted(functions)


def count_xi_basis(n: int, mode: CountMode = CountMode.CLOSED_SUM) -> int:
    if mode == CountMode.ENUMERATE:
        return len(enumerate_xi_basis(n))
    return xi_basis_count(n)
