"""Complexity-dimension and sample-complexity calculators."""

from .models import Ball, BoundOptions, BoundReport, CountMode, FormulaId, ProblemDims, Rounding
from .dimensions import (
    axis_shatter_bound,
    dmax_rat,
    dual_vc_lower,
    fat_combined,
    fat_combined_branches,
    fat_control,
    fat_hyperplane,
    fat_lipschitz,
    gj_bound,
    lipschitz_constant,
    lipschitz_log2,
    pd_upper,
    rat_vc_abstract,
    vc_lower,
    vc_upper_scalar,
    vc_upper_scalar_zero_state,
    vc_upper_vector,
)
from .sample import (
    invert_sample_complexity,
    sample_complexity_agnostic,
    sample_complexity_agnostic_oform,
    sample_complexity_concept,
)
from .counting import (
    count_xi_basis,
    enumerate_pole_patterns,
    enumerate_xi_basis,
    pole_free_count,
    pole_free_count_binomial,
    sign_pattern_count,
    sign_pattern_count_log2,
    xi_basis_count,
)
from .registry import FormulaRegistry, FormulaSpec, get_formula_registry, registry

__all__ = [
    # Models
    "Ball",
    "BoundOptions",
    "BoundReport",
    "CountMode",
    "FormulaId",
    "ProblemDims",
    "Rounding",
    # Dimensions
    "axis_shatter_bound",
    "dmax_rat",
    "dual_vc_lower",
    "fat_combined",
    "fat_combined_branches",
    "fat_control",
    "fat_hyperplane",
    "fat_lipschitz",
    "gj_bound",
    "lipschitz_constant",
    "lipschitz_log2",
    "pd_upper",
    "rat_vc_abstract",
    "vc_lower",
    "vc_upper_scalar",
    "vc_upper_scalar_zero_state",
    "vc_upper_vector",
    # Sample complexity
    "invert_sample_complexity",
    "sample_complexity_agnostic",
    "sample_complexity_agnostic_oform",
    "sample_complexity_concept",
    # Counting
    "count_xi_basis",
    "enumerate_pole_patterns",
    "enumerate_xi_basis",
    "pole_free_count",
    "pole_free_count_binomial",
    "sign_pattern_count",
    "sign_pattern_count_log2",
    "xi_basis_count",
    # Registry
    "FormulaRegistry",
    "FormulaSpec",
    "get_formula_registry",
    "registry",
]
