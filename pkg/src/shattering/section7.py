"""Indicator-control construction with VC dimension k for the oscillator system."""

import math
import sys
from typing import Any, Dict, Iterable, Optional

import numpy as np

from ..systems import oracle_rk4, oscillator_realization
from ..utils import SECTION7, InvalidInputError, PrecisionLimitError, get_logger
from .base import ShatterConstruction, constructions
from .models import DichotomyPattern, IndicatorControl, ShatterReport

logger = get_logger(__name__)


def section7_lambda(subset: Iterable[int]) -> float:
    """λ_J = π Σ_{i∈J} 2^i."""
    return math.pi * sum(2 ** i for i in set(subset))


def section7_output(ctrl: IndicatorControl, lam: float) -> float:
    """∫_a^b sin(λt) dt in the product-of-sines form; 0 at λ = 0."""
    if lam < 0:
        raise InvalidInputError(f"lambda must be >= 0, got {lam}")
    if lam == 0.0:
        return 0.0
    a, b = ctrl.interval
    return (2.0 / lam) * math.sin(lam * (a + b) / 2.0) * math.sin(lam * (b - a) / 2.0)


def section7_output_cosines(ctrl: IndicatorControl, lam: float) -> float:
    """(cos λa − cos λb)/λ, the direct but cancellation-prone form."""
    a, b = ctrl.interval
    return (math.cos(lam * a) - math.cos(lam * b)) / lam


def section7_normalized(ctrl: IndicatorControl, lam: float) -> float:
    """section7_output / λ, continued to (b² − a²)/2 at λ = 0."""
    a, b = ctrl.interval
    if lam == 0.0:
        return (b * b - a * a) / 2.0
    return (2.0 / (lam * lam)) * math.sin(lam * (a + b) / 2.0) * math.sin(lam * (b - a) / 2.0)


def below_guard(ctrl: IndicatorControl, lam: float, value: float, guard: float) -> bool:
    """True when |value| is too small relative to λ (b − a) to trust its sign."""
    if lam == 0.0:
        return False
    a, b = ctrl.interval
    return abs(value) < guard * sys.float_info.epsilon * lam * (b - a)


def section7_rk4_output(ctrl: IndicatorControl, lam: float, steps: int = 20_000) -> float:
    """Simulate the oscillator ẍ = −λ²x + ω_i and return y(1) = −x₁(1)."""
    return oracle_rk4(
        oscillator_realization(lam),
        ctrl.control_value,
        1.0,
        steps,
        breakpoints=ctrl.breakpoints,
    )


@constructions.register
class Section7Construction(ShatterConstruction):
    """
    Enumerate every subset J of {1..k}, set λ = λ_J and read off the k-bit sign
    pattern of the outputs for ω_1..ω_k. Shattering holds when J ↦ pattern is
    a bijection onto {0,1}^k.

    Patterns use the normalized output section7_output/λ so that λ_∅ = 0 is
    labelled by the sign of its limit instead of collapsing to 0.
    """

    name = "section7"

    def __init__(self, k: int, min_magnitude_guard: Optional[float] = None):
        if k < 1:
            raise InvalidInputError(f"k must be >= 1, got {k}")
        if k > SECTION7["max_k"]:
            raise PrecisionLimitError(
                f"k = {k} exceeds the double-precision limit {SECTION7['max_k']} for this construction"
            )
        self.k = k
        self.guard = SECTION7["guard"] if min_magnitude_guard is None else min_magnitude_guard
        self.controls = IndicatorControl.family(k)

    def _pattern(self, lam: float) -> DichotomyPattern:
        values = [section7_normalized(ctrl, lam) for ctrl in self.controls]
        return DichotomyPattern.from_bits([1 if v > 0 else 0 for v in values])

    def run(self) -> ShatterReport:
        witnesses: Dict[str, Dict[str, Any]] = {}
        failures: Dict[str, str] = {}
        indeterminate = 0
        for mask in range(2 ** self.k):
            subset = [i for i in range(1, self.k + 1) if mask >> (i - 1) & 1]
            lam = section7_lambda(subset)
            outputs = [section7_output(ctrl, lam) for ctrl in self.controls]
            flagged = [
                ctrl.index for ctrl, value in zip(self.controls, outputs)
                if below_guard(ctrl, lam, value, self.guard)
            ]
            if flagged:
                indeterminate += 1
                failures[f"J={subset}"] = f"outputs below magnitude guard for controls {flagged}"
                continue
            key = self._pattern(lam).key
            if key in witnesses:
                failures[f"J={subset}"] = f"pattern {key} already realized by J={witnesses[key]['subset']}"
                continue
            witnesses[key] = {"subset": subset, "lambda": lam, "outputs": outputs}

        logger.debug("Indicator subset enumeration done", k=self.k, patterns=len(witnesses), indeterminate=indeterminate)
        return ShatterReport.assemble(
            construction=self.name,
            points=[{"index": c.index, "interval": list(c.interval)} for c in self.controls],
            witnesses=witnesses,
            expected_patterns=2 ** self.k,
            indeterminate_count=indeterminate,
            certified_lower_bound=float(self.k),
            failures=failures,
            notes=["pattern bit i is 1 iff the normalized output for control i is positive"],
        )

    def evaluate_witness(self, record: Dict[str, Any]) -> Optional[str]:
        return self._pattern(float(record["lambda"])).key


def subset_pattern_table(k: int) -> np.ndarray:
    """Matrix of pattern bits, row J (as bitmask) and column i."""
    construction = Section7Construction(k)
    rows = []
    for mask in range(2 ** k):
        subset = [i for i in range(1, k + 1) if mask >> (i - 1) & 1]
        rows.append(construction._pattern(section7_lambda(subset)).bits)
    return np.asarray(rows, dtype=np.int8)


def verify_section7(k: int, min_magnitude_guard: Optional[float] = None) -> ShatterReport:
    """Exhaustive check that the λ_J family shatters the k indicator controls."""
    return Section7Construction(k, min_magnitude_guard).run()
