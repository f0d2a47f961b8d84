"""Shattering constructions and empirical lower-bound estimators."""

from .models import (
    DichotomyPattern,
    IndicatorControl,
    ShatterReport,
    ShatterStatus,
    to_jsonable,
)
from .base import ConstructionRegistry, ShatterConstruction, constructions
from .section7 import (
    Section7Construction,
    section7_lambda,
    section7_normalized,
    section7_output,
    section7_output_cosines,
    section7_rk4_output,
    verify_section7,
)
from .axis import (
    AxisShatterConstruction,
    RankSearchConfig,
    axis_shatter_construct,
    find_rank_k_lambdas,
    h_transform,
    lambda_matrix,
)
from .hyperplane import (
    HyperplaneKLeN,
    HyperplaneMode,
    HyperplaneNLeK,
    hyperplane_lower_witness,
    real_mode_system,
)
from .classes import ConstantClass, FunctionClass, LinearClass, LossClass, SystemClass
from .empirical import (
    EmpiricalFat,
    EmpiricalPseudo,
    EmpiricalVC,
    LevelSearchConfig,
    empirical_fat_lower,
    empirical_pseudo_lower,
    empirical_vc_lower,
    sample_parameters,
)


__all__ = [
    # Models
    "DichotomyPattern",
    "IndicatorControl",
    "ShatterReport",
    "ShatterStatus",
    "to_jsonable",
    # Registry
    "ConstructionRegistry",
    "ShatterConstruction",
    "constructions",
    # Indicator-control oscillator
    "Section7Construction",
    "section7_lambda",
    "section7_normalized",
    "section7_output",
    "section7_output_cosines",
    "section7_rk4_output",
    "verify_section7",
    # Axis shattering
    "AxisShatterConstruction",
    "RankSearchConfig",
    "axis_shatter_construct",
    "find_rank_k_lambdas",
    "h_transform",
    "lambda_matrix",
    # Hyperplanes
    "HyperplaneKLeN",
    "HyperplaneMode",
    "HyperplaneNLeK",
    "hyperplane_lower_witness",
    "real_mode_system",
    # Classes and estimators
    "ConstantClass",
    "FunctionClass",
    "LinearClass",
    "LossClass",
    "SystemClass",
    "EmpiricalFat",
    "EmpiricalPseudo",
    "EmpiricalVC",
    "LevelSearchConfig",
    "empirical_fat_lower",
    "empirical_pseudo_lower",
    "empirical_vc_lower",
    "sample_parameters",
]
