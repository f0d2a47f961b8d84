"""Band-limited inputs, parameterized systems and their exact responses."""

from .models import (
    BasisFunction,
    BasisFamily,
    EigenKind,
    JordanBlock,
    FullSystemParams,
    CompactSystemParams,
    ControlMatrix,
    default_jordan_tag,
    xi_slots,
    block_eigenvalues,
)
from .response import (
    SystemParams,
    response_full,
    response_compact,
    precompute_lambda_j,
    lambda_table,
    compact_xi_integrals,
    sign_observe,
    loss_eval,
    empirical_loss,
    PoleHit,
    pole_pattern,
    branch_label,
    check_dimensions,
)
from .oracles import LinearRealization, oscillator_realization, oracle_rk4, response_quadrature
from .io import SystemSpec, ControlsSpec, load_system, load_controls, read_json

__all__ = [
    "BasisFunction",
    "BasisFamily",
    "EigenKind",
    "JordanBlock",
    "FullSystemParams",
    "CompactSystemParams",
    "ControlMatrix",
    "default_jordan_tag",
    "xi_slots",
    "block_eigenvalues",
    "SystemParams",
    "response_full",
    "response_compact",
    "precompute_lambda_j",
    "lambda_table",
    "compact_xi_integrals",
    "sign_observe",
    "loss_eval",
    "empirical_loss",
    "PoleHit",
    "pole_pattern",
    "branch_label",
    "check_dimensions",
    "LinearRealization",
    "oscillator_realization",
    "oracle_rk4",
    "response_quadrature",
    "SystemSpec",
    "ControlsSpec",
    "load_system",
    "load_controls",
    "read_json",
]
