"""CSV and JSON writers with byte-stable formatting."""

import json
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Union

import pandas as pd

from ..bounds import BoundReport

FLOAT_FORMAT = "%.17g"

BOUND_COLUMNS = [
    "formula_id",
    "value",
    "ceil_value",
    "n",
    "m",
    "p",
    "k",
    "ell_max",
    "tau",
    "M",
    "R",
    "gamma",
    "eps",
    "delta",
    "kappa",
    "inputs",
    "notes",
]

DIM_COLUMNS = BOUND_COLUMNS[3:15]


def frame_to_csv(frame: pd.DataFrame) -> str:
    """CSV text: LF line endings, '.' decimal point, 17 significant digits."""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def bound_rows(reports: Iterable[BoundReport], dims_list: Iterable[dict]) -> List[dict]:
    """Flatten reports (paired with the dims each was evaluated at) into table rows."""
    rows = []
    for report, dims in zip(reports, dims_list):
        row = {
            "formula_id": report.formula_id.value,
            "value": report.value,
            "ceil_value": report.ceil_value,
        }
        row.update({name: dims.get(name) for name in DIM_COLUMNS})
        row["inputs"] = json.dumps(report.inputs, sort_keys=True, separators=(",", ":"))
        row["notes"] = "; ".join(report.notes)
        rows.append(row)
    return rows


def bounds_to_csv(rows: List[dict]) -> str:
    return frame_to_csv(pd.DataFrame(rows, columns=BOUND_COLUMNS))


def emit(text: str, out: Optional[Union[str, Path]] = None) -> None:
    """Write text to out, or to stdout when out is None."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
