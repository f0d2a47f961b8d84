"""JSON descriptions of systems and control matrices."""

import json
from pathlib import Path
from typing import Any, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..utils import DimensionMismatchError
from .models import (
    BasisFamily,
    BasisFunction,
    CompactSystemParams,
    ControlMatrix,
    FullSystemParams,
    JordanBlock,
)


class SystemSpec(BaseModel):
    """
    A system file.

    Full (modal) form: "coeffs" is the m×n×2n×p tensor, "eigen_table" holds n rows
    of (x1, x2, x3, x4) and "offset" has p entries.
    Compact form: "jordan_tag" is present, "coeffs" is m×n, "eigen_table" is the
    flat list of eigen parameters and "offset" is a scalar.
    """

    model_config = ConfigDict(extra="forbid")

    basis: List[BasisFunction] = Field(min_length=1)
    coeffs: List[Any]
    eigen_table: List[Any]
    offset: Optional[Union[float, List[float]]] = None
    jordan_tag: Optional[List[JordanBlock]] = None
    tau: float = Field(1.0, gt=0)

    @property
    def is_compact(self) -> bool:
        return self.jordan_tag is not None

    def family(self) -> BasisFamily:
        return BasisFamily(elements=self.basis)

    def params(self) -> Union[FullSystemParams, CompactSystemParams]:
        if self.is_compact:
            offset = self.offset if self.offset is not None else 0.0
            if isinstance(offset, list):
                if len(offset) != 1:
                    raise DimensionMismatchError("compact systems have a scalar offset")
                offset = offset[0]
            return CompactSystemParams(
                coeffs=self.coeffs,
                eigen_params=self.eigen_table,
                jordan_tag=self.jordan_tag,
                offset=offset,
            )
        offset = self.offset
        if offset is None:
            offset = [0.0] * len(self.coeffs[0][0][0])
        elif not isinstance(offset, list):
            offset = [offset]
        return FullSystemParams(coeffs=self.coeffs, eigen_table=self.eigen_table, offset=offset)


class ControlsSpec(BaseModel):
    """A control file: {"G": [[...], ...]}."""

    model_config = ConfigDict(extra="forbid")

    G: List[List[float]]

    def matrix(self) -> ControlMatrix:
        return ControlMatrix(entries=self.G)


def read_json(path: Union[str, Path]) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def load_system(path: Union[str, Path]) -> SystemSpec:
    return SystemSpec.model_validate(read_json(path))


def load_controls(path: Union[str, Path]) -> ControlMatrix:
    return ControlsSpec.model_validate(read_json(path)).matrix()
