"""Formula registry: one builder per FormulaId producing a BoundReport."""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from ..utils import BoundOverflowError, InvalidInputError, get_logger
from . import counting, dimensions, sample
from .models import Ball, BoundOptions, BoundReport, FormulaId, ProblemDims, Rounding

logger = get_logger(__name__)

Builder = Callable[[ProblemDims, BoundOptions], BoundReport]


@dataclass
class FormulaSpec:
    """A registered formula."""
    formula_id: FormulaId
    description: str
    builder: Builder


class FormulaRegistry:
    """Registry for bound formulas."""

    def __init__(self):
        self._formulas: Dict[FormulaId, FormulaSpec] = {}

    def register(self, formula_id: FormulaId, description: str) -> Callable[[Builder], Builder]:
        """Decorator registering a builder under formula_id."""
        def decorate(builder: Builder) -> Builder:
            self._formulas[formula_id] = FormulaSpec(formula_id, description, builder)
            return builder
        return decorate

    def get(self, formula_id: FormulaId) -> Optional[FormulaSpec]:
        try:
            return self._formulas.get(FormulaId(formula_id))
        except ValueError:
            return None

    def get_all(self) -> List[FormulaSpec]:
        return list(self._formulas.values())

    def evaluate(
        self,
        formula_id: FormulaId,
        dims: ProblemDims,
        options: Optional[BoundOptions] = None,
    ) -> BoundReport:
        """Evaluate one formula; unknown ids raise InvalidInputError."""
        spec = self.get(formula_id)
        if spec is None:
            raise InvalidInputError(f"unknown formula_id {formula_id!r}")
        report = spec.builder(dims, options or BoundOptions())
        logger.debug("Bound evaluated", formula_id=spec.formula_id.value, value=report.value)
        return report

    def evaluate_many(
        self,
        formula_ids: List[FormulaId],
        dims: ProblemDims,
        options: Optional[BoundOptions] = None,
    ) -> List[BoundReport]:
        return [self.evaluate(formula_id, dims, options) for formula_id in formula_ids]


# Global registry instance
registry = FormulaRegistry()


def _dims(dims: ProblemDims, *names: str) -> Dict[str, object]:
    return {name: getattr(dims, name) for name in names}


@registry.register(FormulaId.VC_UPPER_SCALAR, "VC upper bound, scalar sign output")
def _vc_upper_scalar(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.vc_upper_scalar(dims.n, dims.m, dims.k, dims.ell_max)
    return BoundReport.build(
        FormulaId.VC_UPPER_SCALAR, value, _dims(dims, "n", "m", "k", "ell_max"),
        notes=["pieces counted as (1+2k)^n"],
    )


@registry.register(FormulaId.VC_UPPER_SCALAR_ZERO_STATE, "VC upper bound, zero initial state")
def _vc_upper_zero_state(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.vc_upper_scalar_zero_state(dims.n, dims.m, dims.k, dims.ell_max)
    return BoundReport.build(
        FormulaId.VC_UPPER_SCALAR_ZERO_STATE, value, _dims(dims, "n", "m", "k", "ell_max"),
        notes=["parameter count 2mn^2+4n (no output offset)"],
    )


@registry.register(FormulaId.VC_LOWER, "VC lower bound from axis and hyperplane shattering")
def _vc_lower(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.vc_lower(dims.n, dims.k, options.variant)
    inputs = {**_dims(dims, "n", "k"), "variant": options.variant.value}
    return BoundReport.build(FormulaId.VC_LOWER, value, inputs, notes=[f"log rounding: {options.variant.value}"])


@registry.register(FormulaId.VC_UPPER_VECTOR, "VC upper bound, vector sign output")
def _vc_upper_vector(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.vc_upper_vector(dims.n, dims.m, dims.p, dims.k, dims.ell_max)
    return BoundReport.build(
        FormulaId.VC_UPPER_VECTOR, value, _dims(dims, "n", "m", "p", "k", "ell_max"),
        notes=["pieces counted as 2^p-1+2p(2k+1)^n+2nk"],
    )


@registry.register(FormulaId.PD_UPPER, "Pseudo-dimension upper bound of the loss class")
def _pd_upper(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.pd_upper(dims.n, dims.m, dims.k, dims.ell_max)
    return BoundReport.build(
        FormulaId.PD_UPPER, value, _dims(dims, "n", "m", "k", "ell_max"),
        notes=["pieces counted as (2k+1)^n", "degree doubled by the loss"],
    )


@registry.register(FormulaId.FAT_LIPSCHITZ, "Fat-shattering bound for Lipschitz parameterizations")
def _fat_lipschitz(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    lipschitz = options.L
    log2_lipschitz = None
    notes = []
    if lipschitz is None:
        lipschitz = dimensions.lipschitz_constant(dims.n, dims.m, dims.tau, dims.M)
        log2_lipschitz = dimensions.lipschitz_log2(dims.n, dims.m, dims.tau, dims.M)
        notes.append("L = n^2 m tau^n e^tau M")
        if math.isinf(lipschitz):
            notes.append(f"L overflows a double; log2 L = {log2_lipschitz:.17g}")
    gamma = dims.margin
    value = dimensions.fat_lipschitz(dims.k, options.C, lipschitz, gamma, options.ball, log2_lipschitz)
    if options.ball == Ball.OPEN_INF and options.C * lipschitz / gamma < 2:
        notes.append("floor(CL/gamma) <= 1: bound is 0")
    inputs = {
        "k": dims.k,
        "C": options.C,
        "L": lipschitz if math.isfinite(lipschitz) else None,
        "gamma": gamma,
        "ball": options.ball.value,
    }
    return BoundReport.build(FormulaId.FAT_LIPSCHITZ, value, inputs, notes=notes)


@registry.register(FormulaId.FAT_CONTROL, "Fat-shattering bound for the control system class")
def _fat_control(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    gamma = dims.margin
    value = dimensions.fat_control(dims.n, dims.m, dims.tau, dims.M, gamma, options.rounding)
    ratio = dimensions.lipschitz_constant(dims.n, dims.m, dims.tau, dims.M) / gamma
    notes = [f"rounding inside log: {options.rounding.value}"]
    if options.rounding == Rounding.FLOOR and ratio < 1:
        notes.append("argument below 1 under floor: bound is 0")
    inputs = {**_dims(dims, "n", "m", "tau", "M"), "gamma": gamma, "rounding": options.rounding.value}
    return BoundReport.build(FormulaId.FAT_CONTROL, value, inputs, notes=notes)


@registry.register(FormulaId.FAT_COMBINED, "Minimum of the Lipschitz and pseudo-dimension fat bounds")
def _fat_combined(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    gamma = dims.margin
    control, pseudo = dimensions.fat_combined_branches(
        dims.n, dims.m, dims.k, dims.ell_max, dims.tau, dims.M, gamma, options.rounding
    )
    notes = ["gamma supplied" if dims.gamma is not None else "gamma = (1/4 - kappa) eps"]
    notes.append("branch: lipschitz" if control <= pseudo else "branch: pseudo-dimension")
    inputs = {
        **_dims(dims, "n", "m", "k", "ell_max", "tau", "M", "eps", "kappa"),
        "gamma": gamma,
        "rounding": options.rounding.value,
    }
    return BoundReport.build(
        FormulaId.FAT_COMBINED, min(control, pseudo), inputs, notes=notes,
        extras={"lipschitz_branch": control, "pseudo_branch": pseudo},
    )


@registry.register(FormulaId.FAT_HYPERPLANE, "Fat-shattering bound for bounded hyperplanes")
def _fat_hyperplane(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    gamma = dims.margin
    value = dimensions.fat_hyperplane(dims.R, gamma, dims.k)
    return BoundReport.build(FormulaId.FAT_HYPERPLANE, value, {"R": dims.R, "gamma": gamma, "k": dims.k})


@registry.register(FormulaId.SAMPLE_COMPLEXITY_CONCEPT, "PAC sample complexity from a VC value")
def _concept(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    notes = []
    d = options.vc_value
    if d is None:
        d = dimensions.vc_upper_scalar(dims.n, dims.m, dims.k, dims.ell_max)
        notes.append("d = vc_upper_scalar")
    value = sample.sample_complexity_concept(d, dims.eps, dims.delta)
    return BoundReport.build(
        FormulaId.SAMPLE_COMPLEXITY_CONCEPT, value, {"d": d, "eps": dims.eps, "delta": dims.delta}, notes=notes
    )


@registry.register(FormulaId.SAMPLE_COMPLEXITY_AGNOSTIC, "Proper agnostic sample complexity from a fat value")
def _agnostic(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    notes = [f"grouping: {sample.AGNOSTIC_GROUPING}"]
    d = options.fat_value
    if d is None:
        d = dimensions.fat_combined(
            dims.n, dims.m, dims.k, dims.ell_max, dims.tau, dims.M, dims.margin, options.rounding
        )
        notes.append("d = fat_combined")
    alpha = options.alpha if options.alpha is not None else dims.kappa * dims.eps
    if options.alpha is None:
        notes.append("alpha = kappa eps")
    readings = sample.agnostic_readings(d, alpha, dims.delta)
    return BoundReport.build(
        FormulaId.SAMPLE_COMPLEXITY_AGNOSTIC, readings["as_printed"],
        {"d": d, "alpha": alpha, "delta": dims.delta}, notes=notes,
        extras={"oform": readings["oform"], "nested_log": readings["nested_log"]},
    )


@registry.register(FormulaId.GJ_BOUND, "Goldberg-Jerrum bound")
def _gj_bound(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    notes = []
    ell, degree, count = options.gj_ell, options.gj_degree, options.gj_count
    if ell is None:
        ell = 2 * dims.m * dims.n ** 2 + 4 * dims.n
        notes.append("ell = 2mn^2+4n")
    if degree is None:
        degree = 2 * dims.m * dims.n ** 2 * dims.k * dimensions.dmax_rat(dims.n, dims.ell_max) + 1
        notes.append("d = 2mn^2 k dmax + 1")
    if count is None:
        count = dimensions.piece_count(dims.n, dims.k)
        notes.append("s = 2nk + 2(2k+1)^n")
    value = dimensions.gj_bound(ell, degree, count)
    return BoundReport.build(FormulaId.GJ_BOUND, value, {"ell": ell, "d": degree, "s": count}, notes=notes)


@registry.register(FormulaId.SIGN_PATTERN_COUNT, "Number of sign vectors of a polynomial family")
def _sign_patterns(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    n_vars = options.n_vars if options.n_vars is not None else 2 * dims.n
    m_polys = options.m_polys if options.m_polys is not None else 2 * dims.n * dims.k
    degree = options.gj_degree if options.gj_degree is not None else 2
    log2_value = counting.sign_pattern_count_log2(n_vars, degree, m_polys)
    value = counting.sign_pattern_count(n_vars, degree, m_polys)
    return BoundReport.build(
        FormulaId.SIGN_PATTERN_COUNT, value, {"n_vars": n_vars, "d": degree, "m_polys": m_polys},
        extras={"log2_value": log2_value},
    )


@registry.register(FormulaId.POLE_FREE_COUNT, "Pole-free piece count (1+2k)^n")
def _pole_free(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    count = counting.pole_free_count(dims.n, dims.k)
    try:
        value = float(count)
    except OverflowError as e:
        raise BoundOverflowError(f"(1+2k)^n with n={dims.n}, k={dims.k} exceeds double range") from e
    notes = []
    if dims.n <= 8 and counting.pole_free_count_binomial(dims.n, dims.k) == count:
        notes.append("matches binomial sum")
    return BoundReport.build(FormulaId.POLE_FREE_COUNT, value, _dims(dims, "n", "k"), notes=notes)


@registry.register(FormulaId.DUAL_VC_LOWER, "Primal VC lower bound from the dual VC dimension")
def _dual(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.dual_vc_lower(options.vc_dual)
    return BoundReport.build(FormulaId.DUAL_VC_LOWER, value, {"vc_dual": options.vc_dual})


@registry.register(FormulaId.AXIS_SHATTER_BOUND, "Dual VC lower bound from axis shattering")
def _axis(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.axis_shatter_bound(options.axis_sizes)
    return BoundReport.build(FormulaId.AXIS_SHATTER_BOUND, value, {"r": list(options.axis_sizes)})


@registry.register(FormulaId.DMAX_RAT, "Degree bound of the rationality condition")
def _dmax(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = dimensions.dmax_rat(dims.n, dims.ell_max)
    return BoundReport.build(FormulaId.DMAX_RAT, value, _dims(dims, "n", "ell_max"))


@registry.register(FormulaId.RAT_VC_ABSTRACT, "VC bound under abstract rationality conditions")
def _rat(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    notes = [] if dims.d_rat is not None else ["d_rat = 4(n + ell_max)"]
    value = dimensions.rat_vc_abstract(dims.n, dims.m, dims.k, dims.h_rat, dims.degree)
    inputs = {**_dims(dims, "n", "m", "k", "h_rat"), "d_rat": dims.degree}
    return BoundReport.build(
        FormulaId.RAT_VC_ABSTRACT, value, inputs, notes=notes,
        extras={"log2_s": dimensions.rat_polynomial_count_log2(dims.n, dims.k, dims.h_rat, dims.degree)},
    )


@registry.register(FormulaId.XI_BASIS_COUNT, "Number of ξ functions needed for e^{At}")
def _xi_count(dims: ProblemDims, options: BoundOptions) -> BoundReport:
    value = counting.count_xi_basis(dims.n, options.count_mode)
    return BoundReport.build(
        FormulaId.XI_BASIS_COUNT, value, {"n": dims.n, "mode": options.count_mode.value},
        extras={"full_count": 2.0 * dims.n ** 2},
    )


def get_formula_registry() -> FormulaRegistry:
    return registry
