"""Command implementations behind the vclab CLI."""

import asyncio
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from ..bounds import registry as formula_registry
from ..learning import ExperimentRunner
from ..shattering import ShatterStatus, constructions, to_jsonable
from ..systems import (
    CompactSystemParams,
    branch_label,
    load_controls,
    load_system,
    response_compact,
    response_full,
    response_quadrature,
    sign_observe,
)
from ..utils import get_logger
from .schema import BoundsConfig, LearnConfig, construction_kwargs
from .selftest import run_selftest
from .writers import bound_rows, bounds_to_csv, frame_to_csv, to_json

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_INDETERMINATE = 3

STATUS_EXIT_CODES = {
    ShatterStatus.COMPLETE: EXIT_OK,
    ShatterStatus.INCOMPLETE: EXIT_FAILED,
    ShatterStatus.INDETERMINATE: EXIT_INDETERMINATE,
}


@dataclass
class CommandResult:
    """Rendered output plus the process exit code."""
    text: str
    exit_code: int = EXIT_OK
    payload: Any = None


def cmd_bounds(config: BoundsConfig, fmt: str = "csv") -> CommandResult:
    """One BoundReport row per (grid point, formula)."""
    reports, dims_list = [], []
    for dims in config.points():
        for formula_id in config.formulas:
            reports.append(formula_registry.evaluate(formula_id, dims, config.options))
            dims_list.append(dims.model_dump())
    logger.info("Bounds evaluated", rows=len(reports))

    rows = bound_rows(reports, dims_list)
    if fmt == "json":
        payload = [
            {**report.model_dump(mode="json"), "dims": dims}
            for report, dims in zip(reports, dims_list)
        ]
        return CommandResult(text=to_json(payload), payload=payload)
    return CommandResult(text=bounds_to_csv(rows), payload=rows)


def cmd_verify(config: Any, seed: Optional[int] = None) -> CommandResult:
    """Run a construction; exit 0 complete, 1 incomplete, 3 indeterminate."""
    seed = seed if seed is not None else config.seed
    construction = constructions.create(config.construction, **construction_kwargs(config, seed))
    report = construction.run()

    mismatched = construction.verify_witnesses(report)
    exit_code = STATUS_EXIT_CODES[report.status]
    if mismatched:
        report.notes.append(f"witness re-evaluation failed for {sorted(mismatched)}")
        exit_code = EXIT_FAILED

    payload = to_jsonable(report.model_dump(mode="json"))
    return CommandResult(text=to_json(payload), exit_code=exit_code, payload=payload)


def cmd_respond(
    system_path: str,
    controls_path: str,
    tau: Optional[float] = None,
    oracle: bool = False,
) -> CommandResult:
    """Evaluate y(τ) and sign(y) for a system file and a control file."""
    spec = load_system(system_path)
    family = spec.family()
    params = spec.params()
    G = load_controls(controls_path)
    tau = spec.tau if tau is None else tau

    if isinstance(params, CompactSystemParams):
        y = np.array([response_compact(params, G, family, tau)])
        full = params.to_full()
    else:
        y = response_full(params, G, family, tau)
        full = params

    payload = {
        "tau": tau,
        "y": y.tolist(),
        "sign": sign_observe(y).tolist(),
        "branch": branch_label(full, family),
    }
    if oracle:
        reference = response_quadrature(full, G, family, tau)
        payload["oracle"] = {
            "y": reference.tolist(),
            "discrepancy": float(np.max(np.abs(reference - y))),
        }
    return CommandResult(text=to_json(payload), payload=payload)


def cmd_learn(config: LearnConfig, seed: Optional[int] = None, fmt: str = "csv") -> CommandResult:
    """PAC experiment rows as CSV (or JSON)."""
    experiment = config.experiment(seed if seed is not None else config.seed)
    result = asyncio.run(ExperimentRunner(experiment).run())
    if fmt == "json":
        payload = result.model_dump(mode="json")
        return CommandResult(text=to_json(payload), payload=payload)
    return CommandResult(text=frame_to_csv(result.to_frame()), payload=result)


def cmd_selftest(perturbation: float = 0.0, seed: Optional[int] = None) -> CommandResult:
    report = run_selftest(perturbation, seed)
    payload = {"passed": report.passed, **report.model_dump(mode="json")}
    return CommandResult(
        text=to_json(payload),
        exit_code=EXIT_OK if report.passed else EXIT_FAILED,
        payload=payload,
    )
