"""System, basis and control schemas."""

import math
import re
from enum import Enum
from typing import Any, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..integrals import Trig, integrate_xi_times_basis

GRAM_RATIO = 1e-10
EIGEN_TABLE_TOL = 1e-9


class BasisFunction(BaseModel):
    """One input basis element t^ell e^{alpha t} sin|cos(beta t)."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    ell: int = Field(0, ge=0)
    alpha: float = 0.0
    beta: float = 0.0
    kind: Trig = Trig.COS

    @property
    def signature(self) -> Tuple[int, float, float, str]:
        return (self.ell, self.alpha, self.beta, self.kind.value)

    def __call__(self, t):
        trig = np.sin if self.kind == Trig.SIN else np.cos
        return np.power(t, self.ell) * np.exp(self.alpha * t) * trig(self.beta * t)


class BasisFamily(BaseModel):
    """Ordered, linearly independent input dictionary Ω."""

    model_config = ConfigDict(frozen=True)

    elements: List[BasisFunction] = Field(min_length=1)

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def ell_max(self) -> int:
        return max(element.ell for element in self.elements)

    @model_validator(mode="after")
    def _check_family(self) -> "BasisFamily":
        signatures = [element.signature for element in self.elements]
        if len(set(signatures)) != len(signatures):
            raise ValueError("basis elements must have pairwise distinct (ell, alpha, beta, kind)")
        for index, element in enumerate(self.elements):
            if element.kind == Trig.SIN and element.beta == 0.0:
                raise ValueError(f"basis element {index} is sin(0 t), which vanishes identically")

        singular_values = np.linalg.svd(self.gram_matrix(), compute_uv=False)
        if singular_values[-1] <= GRAM_RATIO * singular_values[0]:
            raise ValueError(
                f"basis family is numerically dependent (sigma_min/sigma_max = "
                f"{singular_values[-1] / singular_values[0]:.3e})"
            )
        return self

    def gram_matrix(self) -> np.ndarray:
        """L² inner products on [0, 1], computed with the closed-form engine."""
        k = self.k
        gram = np.empty((k, k))
        for i, left in enumerate(self.elements):
            for j in range(i, k):
                value = integrate_xi_times_basis(
                    left.ell, left.alpha, left.beta, left.kind, self.elements[j], 1.0
                )
                gram[i, j] = gram[j, i] = value
        return gram

    @classmethod
    def from_list(cls, elements: List[Any]) -> "BasisFamily":
        return cls(elements=[BasisFunction.model_validate(e) for e in elements])


class EigenKind(str, Enum):
    REAL = "real"
    COMPLEX = "complex"


_BLOCK_SHORTHAND = re.compile(r"^([RC])(\d*)$")


class JordanBlock(BaseModel):
    """A real Jordan block; complex blocks cover a conjugate pair."""

    model_config = ConfigDict(frozen=True)

    kind: EigenKind = EigenKind.REAL
    multiplicity: int = Field(1, ge=1)

    @model_validator(mode="before")
    @classmethod
    def _parse_shorthand(cls, value: Any) -> Any:
        # "R", "C", "R2", "C3"
        if isinstance(value, str):
            match = _BLOCK_SHORTHAND.match(value.strip().upper())
            if not match:
                raise ValueError(f"unrecognised Jordan block shorthand {value!r}")
            kind = EigenKind.REAL if match.group(1) == "R" else EigenKind.COMPLEX
            return {"kind": kind, "multiplicity": int(match.group(2) or 1)}
        return value

    @property
    def dimension(self) -> int:
        return self.multiplicity * (2 if self.kind == EigenKind.COMPLEX else 1)

    @property
    def parameter_count(self) -> int:
        return 2 if self.kind == EigenKind.COMPLEX else 1


def default_jordan_tag(n: int) -> List[JordanBlock]:
    return [JordanBlock() for _ in range(n)]


def xi_slots(jordan_tag: List[JordanBlock]) -> List[Tuple[int, int, Trig]]:
    """
    (block index, power, trig) for each of the n ξ-functions of a Jordan tag.

    Real blocks contribute t^s e^{at}; complex blocks contribute the pairs
    t^s e^{at} cos(bt), t^s e^{at} sin(bt).
    """
    slots = []
    for index, block in enumerate(jordan_tag):
        for power in range(block.multiplicity):
            slots.append((index, power, Trig.COS))
            if block.kind == EigenKind.COMPLEX:
                slots.append((index, power, Trig.SIN))
    return slots


def block_eigenvalues(jordan_tag: List[JordanBlock], eigen_params: List[float]) -> List[Tuple[float, float]]:
    """(a, b) per block, consuming eigen_params in tag order."""
    values = []
    position = 0
    for block in jordan_tag:
        if block.kind == EigenKind.COMPLEX:
            values.append((eigen_params[position], eigen_params[position + 1]))
            position += 2
        else:
            values.append((eigen_params[position], 0.0))
            position += 1
    return values


class FullSystemParams(BaseModel):
    """Modal parameter vector: coeffs[i][r][l][kappa], eigen rows and output offset."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    coeffs: List[List[List[List[float]]]]
    eigen_table: List[List[float]]
    offset: List[float]

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @property
    def n(self) -> int:
        return len(self.eigen_table)

    @property
    def p(self) -> int:
        return len(self.offset)

    def coeff_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)

    def eigen_array(self) -> np.ndarray:
        return np.asarray(self.eigen_table, dtype=float)

    @model_validator(mode="after")
    def _check_shapes(self) -> "FullSystemParams":
        n, p = self.n, self.p
        if n < 1 or p < 1 or self.m < 1:
            raise ValueError("need m, n, p >= 1")
        for row_index, row in enumerate(self.eigen_table):
            if len(row) != 4:
                raise ValueError(f"eigen_table row {row_index} must have 4 entries")
            x1, x2, x3, x4 = row
            scale = math.exp(x1)
            if abs(x3 - scale * math.cos(x2)) > EIGEN_TABLE_TOL * max(1.0, scale):
                raise ValueError(f"eigen_table row {row_index}: x3 != e^x1 cos x2")
            if abs(x4 - scale * math.sin(x2)) > EIGEN_TABLE_TOL * max(1.0, scale):
                raise ValueError(f"eigen_table row {row_index}: x4 != e^x1 sin x2")
        shape = np.shape(self.coeffs)
        if shape != (self.m, n, 2 * n, p):
            raise ValueError(f"coeffs must have shape (m, n, 2n, p) = ({self.m}, {n}, {2 * n}, {p}), got {shape}")
        return self

    @classmethod
    def from_eigenvalues(
        cls,
        coeffs: Any,
        eigenvalues: List[Tuple[float, float]],
        offset: Optional[List[float]] = None,
    ) -> "FullSystemParams":
        """Build the table rows (a, b, e^a cos b, e^a sin b) from (a, b) pairs."""
        table = [[a, b, math.exp(a) * math.cos(b), math.exp(a) * math.sin(b)] for a, b in eigenvalues]
        array = np.asarray(coeffs, dtype=float)
        return cls(
            coeffs=array.tolist(),
            eigen_table=table,
            offset=list(offset) if offset is not None else [0.0] * array.shape[-1],
        )


class CompactSystemParams(BaseModel):
    """Scalar-output system in the compact parameterization λ ∈ B_∞(1)."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    coeffs: List[List[float]]
    eigen_params: List[float]
    jordan_tag: List[JordanBlock] = Field(default_factory=list)
    offset: float = 0.0

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs[0])

    def coeff_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)

    @model_validator(mode="before")
    @classmethod
    def _default_tag(cls, data: Any) -> Any:
        if isinstance(data, dict) and not data.get("jordan_tag") and data.get("coeffs"):
            data = {**data, "jordan_tag": default_jordan_tag(len(data["coeffs"][0]))}
        return data

    @model_validator(mode="after")
    def _check_params(self) -> "CompactSystemParams":
        if not self.coeffs or not self.coeffs[0]:
            raise ValueError("coeffs must be a non-empty m x n matrix")
        n = len(self.coeffs[0])
        if any(len(row) != n for row in self.coeffs):
            raise ValueError("coeffs rows must all have n entries")
        if sum(block.dimension for block in self.jordan_tag) != n:
            raise ValueError("jordan_tag block dimensions must sum to n")
        expected = sum(block.parameter_count for block in self.jordan_tag)
        if len(self.eigen_params) != expected:
            raise ValueError(f"jordan_tag needs {expected} eigen parameters, got {len(self.eigen_params)}")
        largest = max(np.max(np.abs(self.coeff_array())), max(map(abs, self.eigen_params)))
        if largest >= 1.0:
            raise ValueError(f"compact parameters must satisfy max |entry| < 1, got {largest}")
        return self

    def to_full(self) -> FullSystemParams:
        """Place each ξ coefficient in its slot of the modal parameterization (p = 1)."""
        n, m = self.n, self.m
        coeffs = np.zeros((m, n, 2 * n, 1))
        eigenvalues = block_eigenvalues(self.jordan_tag, self.eigen_params)
        compact = self.coeff_array()
        for column, (block, power, trig) in enumerate(xi_slots(self.jordan_tag)):
            slot = power if trig == Trig.COS else n + power
            coeffs[:, block, slot, 0] = compact[:, column]
        rows = eigenvalues + [(0.0, 0.0)] * (n - len(eigenvalues))
        return FullSystemParams.from_eigenvalues(coeffs, rows, [self.offset])


class ControlMatrix(BaseModel):
    """Control coefficients G (m rows, k columns); u = G ω."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    entries: List[List[float]]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return len(self.entries[0])

    def array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)

    @field_validator("entries")
    @classmethod
    def _rectangular(cls, entries: List[List[float]]) -> List[List[float]]:
        if not entries or not entries[0]:
            raise ValueError("G must be a non-empty matrix")
        if any(len(row) != len(entries[0]) for row in entries):
            raise ValueError("G rows must have equal length")
        return entries
