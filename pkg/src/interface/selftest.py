"""Self-test suite: closed form vs quadrature, bound sandwich, indicator-control shattering."""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from ..bounds import Rounding, vc_lower, vc_upper_scalar
from ..integrals import ExpTrigMonomial, Trig, evaluate_monomial, integrate_quadrature, monomial_integrand
from ..shattering import verify_section7
from ..utils import SELFTEST, get_logger

logger = get_logger(__name__)


class CheckResult(BaseModel):
    name: str
    passed: bool
    cases: int
    detail: str = ""


class SelftestReport(BaseModel):
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def check_oracle_agreement(perturbation: float = 0.0, seed: int = SELFTEST["seed"]) -> CheckResult:
    """Random monomials: closed form (scaled by 1 + perturbation) against adaptive quadrature."""
    rng = np.random.default_rng(seed)
    cases = SELFTEST["oracle_cases"]
    limit = SELFTEST["max_rate"]
    for case in range(cases):
        power = int(rng.integers(0, SELFTEST["max_power"] + 1))
        rate, freq = (float(v) for v in rng.uniform(-limit, limit, size=2))
        phase = Trig.SIN if rng.integers(0, 2) else Trig.COS
        tau = float(rng.choice(SELFTEST["taus"]))
        value, _, _ = evaluate_monomial(power, rate, freq, phase, tau)
        value *= 1.0 + perturbation
        monomial = ExpTrigMonomial(power=power, rate=rate, freq=freq, phase=phase)
        reference = integrate_quadrature(monomial_integrand(monomial), tau)
        if abs(value - reference) > SELFTEST["abs_tol"] + SELFTEST["rel_tol"] * abs(reference):
            detail = (
                f"K={power} rate={rate!r} freq={freq!r} phase={phase.value} tau={tau}: "
                f"closed form {value!r} vs quadrature {reference!r}"
            )
            return CheckResult(name="oracle_agreement", passed=False, cases=case + 1, detail=detail)
    return CheckResult(name="oracle_agreement", passed=True, cases=cases)


def check_bound_sandwich() -> CheckResult:
    cases = 0
    for n in range(1, 7):
        for k in range(1, 65):
            for ell_max in range(0, 4):
                upper = vc_upper_scalar(n, 1, k, ell_max)
                for variant in Rounding:
                    cases += 1
                    lower = vc_lower(n, k, variant)
                    if lower > upper:
                        detail = f"n={n} k={k} ell_max={ell_max} {variant.value}: {lower} > {upper!r}"
                        return CheckResult(name="bound_sandwich", passed=False, cases=cases, detail=detail)
    return CheckResult(name="bound_sandwich", passed=True, cases=cases)


def check_section7(max_k: int = SELFTEST["section7_max_k"]) -> CheckResult:
    for k in range(1, max_k + 1):
        report = verify_section7(k)
        if not report.complete:
            detail = f"k={k}: {len(report.patterns_found)}/{report.expected_patterns} patterns, status {report.status.value}"
            return CheckResult(name="section7", passed=False, cases=k, detail=detail)
    return CheckResult(name="section7", passed=True, cases=max_k)


def run_selftest(perturbation: float = 0.0, seed: Optional[int] = None) -> SelftestReport:
    """Run every check; perturbation scales closed-form values to prove the suite can fail."""
    checks = [
        check_oracle_agreement(perturbation, SELFTEST["seed"] if seed is None else seed),
        check_bound_sandwich(),
        check_section7(),
    ]
    for check in checks:
        if not check.passed:
            logger.error(f"Self-test check failed: {check.name}", detail=check.detail)
    return SelftestReport(checks=checks)
