"""Run-config schemas for the vclab commands."""

import math
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from ..bounds import BoundOptions, FormulaId, ProblemDims
from ..integrals import Trig
from ..learning import ExperimentConfig
from ..shattering import (
    ConstantClass,
    FunctionClass,
    LevelSearchConfig,
    LinearClass,
    LossClass,
    RankSearchConfig,
    SystemClass,
)
from ..systems import BasisFamily, BasisFunction, JordanBlock, SystemSpec, read_json
from ..utils import INTERPOLATION, LEARNING, InvalidInputError


class IntRange(BaseModel):
    """Inclusive integer range."""

    model_config = ConfigDict(extra="forbid")

    start: int
    stop: int

    def values(self) -> List[int]:
        return list(range(self.start, self.stop + 1))


IntAxis = Union[List[int], IntRange]
FloatAxis = List[float]


class BoundsGrid(BaseModel):
    """Axes swept by cmd_bounds; unset axes keep the dims value."""

    model_config = ConfigDict(extra="forbid")

    n: Optional[IntAxis] = None
    k: Optional[IntAxis] = None
    ell_max: Optional[IntAxis] = None
    gamma: Optional[FloatAxis] = None
    eps: Optional[FloatAxis] = None
    delta: Optional[FloatAxis] = None

    def points(self, dims: ProblemDims) -> List[ProblemDims]:
        """Cartesian product in the order n, k, ell_max, gamma, eps, delta."""
        axes: Dict[str, List[Any]] = {}
        for name in ("n", "k", "ell_max", "gamma", "eps", "delta"):
            axis = getattr(self, name)
            if axis is None:
                axes[name] = [getattr(dims, name)]
            elif isinstance(axis, IntRange):
                axes[name] = axis.values()
            else:
                axes[name] = list(axis)
        points = [dims.model_dump()]
        for name, values in axes.items():
            points = [{**point, name: value} for point in points for value in values]
        return [ProblemDims.model_validate(point) for point in points]


class BoundsConfig(BaseModel):
    """Config for `vclab bounds`."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["bounds"] = "bounds"
    formulas: List[FormulaId] = Field(default_factory=list)
    dims: ProblemDims = Field(default_factory=ProblemDims)
    options: BoundOptions = Field(default_factory=BoundOptions)
    grid: Optional[BoundsGrid] = None

    def points(self) -> List[ProblemDims]:
        return self.grid.points(self.dims) if self.grid else [self.dims]


def sine_family(k: int) -> List[BasisFunction]:
    """sin(jπt), j = 1..k."""
    return [BasisFunction(ell=0, alpha=0.0, beta=j * math.pi, kind=Trig.SIN) for j in range(1, k + 1)]


class FamilyMixin(BaseModel):
    """Basis given explicitly, or k for the default sin(jπt) family."""

    basis: Optional[List[BasisFunction]] = None
    k: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def _need_family(self):
        if self.basis is None and self.k is None:
            raise ValueError("give either basis or k")
        if self.basis is not None and self.k is not None and len(self.basis) != self.k:
            raise ValueError(f"k = {self.k} disagrees with {len(self.basis)} basis elements")
        return self

    def family(self) -> BasisFamily:
        return BasisFamily(elements=self.basis if self.basis is not None else sine_family(self.k))


class SearchSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    range: Optional[List[float]] = Field(None, min_length=2, max_length=2)
    attempts: Optional[int] = Field(None, ge=1)
    cond_threshold: Optional[float] = Field(None, gt=1.0)

    def build(self, seed: int) -> RankSearchConfig:
        fields = {name: value for name, value in self.model_dump().items() if value is not None}
        if "range" in fields:
            fields["range"] = tuple(fields["range"])
        return RankSearchConfig(seed=seed, **fields)


class ClassSpec(BaseModel):
    """Function class searched by the empirical estimators."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["linear", "constant", "system"]
    dim: Optional[int] = Field(None, ge=1)
    bias: bool = False
    low: float = -1.0
    high: float = 1.0
    basis: Optional[List[BasisFunction]] = None
    n: int = Field(1, ge=1)
    jordan_tag: Optional[List[JordanBlock]] = None
    radius: float = Field(0.999, gt=0.0, lt=1.0)
    with_offset: bool = True
    loss: bool = Field(False, description="Wrap in the bounded squared loss; points carry the target last")

    def build(self, points: List[List[float]]) -> FunctionClass:
        inner = self._build_inner(len(points[0]) - int(self.loss))
        return LossClass(inner) if self.loss else inner

    def _build_inner(self, input_dim: int) -> FunctionClass:
        if self.kind == "linear":
            return LinearClass(self.dim or input_dim, self.bias)
        if self.kind == "constant":
            return ConstantClass(self.low, self.high)
        if self.basis is None:
            raise InvalidInputError("system class needs a basis")
        return SystemClass(BasisFamily(elements=self.basis), self.n, self.jordan_tag, self.radius, self.with_offset)


class VerifyBase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: Optional[int] = Field(None, ge=0)


class Section7Verify(VerifyBase):
    construction: Literal["section7"]
    k: int = Field(ge=1)
    min_magnitude_guard: Optional[float] = Field(None, gt=0)


class AxisVerify(VerifyBase, FamilyMixin):
    construction: Literal["axis"]
    n: int = Field(ge=1)
    search: SearchSpec = Field(default_factory=SearchSpec)
    residual_tol: float = Field(INTERPOLATION["residual_tol"], gt=0)


class HyperplaneVerify(VerifyBase, FamilyMixin):
    construction: Literal["hyperplane-kln", "hyperplane-nlk"]
    n: int = Field(ge=1)
    search: SearchSpec = Field(default_factory=SearchSpec)
    residual_tol: float = Field(INTERPOLATION["residual_tol"], gt=0)


class EmpiricalVCVerify(VerifyBase):
    construction: Literal["empirical-vc"]
    function_class: ClassSpec
    points: List[List[float]] = Field(min_length=1)
    budget: int = Field(ge=1)
    workers: int = Field(1, ge=1)


class EmpiricalFatVerify(EmpiricalVCVerify):
    construction: Literal["empirical-fat"]
    gamma: float = Field(gt=0)
    level_search: LevelSearchConfig = Field(default_factory=LevelSearchConfig)


class EmpiricalPseudoVerify(EmpiricalVCVerify):
    construction: Literal["empirical-pseudo"]
    level_search: LevelSearchConfig = Field(default_factory=LevelSearchConfig)


VerifyConfig = Annotated[
    Union[
        Section7Verify, AxisVerify, HyperplaneVerify, EmpiricalVCVerify, EmpiricalFatVerify, EmpiricalPseudoVerify
    ],
    Field(discriminator="construction"),
]
VERIFY_ADAPTER = TypeAdapter(VerifyConfig)

RANDOMIZED_CONSTRUCTIONS = {
    "axis", "hyperplane-kln", "hyperplane-nlk", "empirical-vc", "empirical-fat", "empirical-pseudo",
}


def construction_kwargs(config: Any, seed: Optional[int]) -> Dict[str, Any]:
    """Constructor arguments for the registered construction named by config."""
    if config.construction in RANDOMIZED_CONSTRUCTIONS and seed is None:
        raise InvalidInputError(f"construction {config.construction!r} is randomized and needs a seed")
    if isinstance(config, Section7Verify):
        return {"k": config.k, "min_magnitude_guard": config.min_magnitude_guard}
    if isinstance(config, (AxisVerify, HyperplaneVerify)):
        return {
            "n": config.n,
            "family": config.family(),
            "search": config.search.build(seed),
            "residual_tol": config.residual_tol,
        }
    kwargs = {
        "function_class": config.function_class.build(config.points),
        "points": config.points,
        "budget": config.budget,
        "seed": seed,
        "workers": config.workers,
    }
    if isinstance(config, EmpiricalFatVerify):
        kwargs.update(gamma=config.gamma, level_search=config.level_search)
    elif isinstance(config, EmpiricalPseudoVerify):
        kwargs.update(level_search=config.level_search)
    return kwargs


class LearnConfig(BaseModel):
    """Config for `vclab learn`."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["learn"] = "learn"
    target: SystemSpec
    seed: Optional[int] = Field(None, ge=0)
    sizes: List[int] = Field(default_factory=lambda: list(LEARNING["sizes"]), min_length=1)
    trials: int = Field(LEARNING["trials"], ge=1)
    test_size: int = Field(LEARNING["test_size"], ge=1)
    budget: int = Field(LEARNING["budget"], ge=1)
    control_half_width: float = Field(LEARNING["control_half_width"], gt=0)
    delta: float = Field(LEARNING["delta"], gt=0, lt=1)
    hypothesis_n: int = Field(1, ge=1)
    hypothesis_tag: Optional[List[JordanBlock]] = None
    proposal_radius: float = Field(LEARNING["proposal_radius"], gt=0, lt=1)
    offset_scale: float = Field(1.0, gt=0)

    def experiment(self, seed: Optional[int]) -> ExperimentConfig:
        if seed is None:
            raise InvalidInputError("learn is randomized and needs a seed (config 'seed' or --seed)")
        if any(s < 1 for s in self.sizes):
            raise InvalidInputError("sizes must be positive")
        return ExperimentConfig(
            target=self.target.params(),
            family=self.target.family(),
            seed=seed,
            sizes=list(self.sizes),
            trials=self.trials,
            test_size=self.test_size,
            budget=self.budget,
            control_half_width=self.control_half_width,
            delta=self.delta,
            hypothesis_n=self.hypothesis_n,
            hypothesis_tag=self.hypothesis_tag,
            proposal_radius=self.proposal_radius,
            offset_scale=self.offset_scale,
        )


def format_validation_error(error: ValidationError) -> str:
    """One 'field.path: message' line per pydantic error."""
    lines = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"]) or "<root>"
        lines.append(f"{path}: {item['msg']}")
    return "\n".join(lines)


def load_bounds_config(path: str) -> BoundsConfig:
    return BoundsConfig.model_validate(read_json(path))


def load_verify_config(path: str):
    return VERIFY_ADAPTER.validate_python(read_json(path))


def load_learn_config(path: str) -> LearnConfig:
    return LearnConfig.model_validate(read_json(path))
