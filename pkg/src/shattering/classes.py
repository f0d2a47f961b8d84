"""Parameterized function classes and their samplers for the empirical estimators."""

from abc import ABC, abstractmethod
from typing import List, Optional

import numpy as np

from ..systems import BasisFamily, JordanBlock, compact_xi_integrals, default_jordan_tag, loss_eval
from ..utils import InvalidInputError


class FunctionClass(ABC):
    """Real-valued class f(θ, x); sign observations threshold at 0."""

    parameter_dim: int

    @abstractmethod
    def evaluate(self, theta: np.ndarray, points: np.ndarray) -> np.ndarray:
        """Values f(θ, x) for each row of points."""
        pass

    @abstractmethod
    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """size parameter vectors, one per row."""
        pass

    def evaluate_batch(self, thetas: np.ndarray, points: np.ndarray) -> np.ndarray:
        return np.vstack([self.evaluate(theta, points) for theta in thetas]) if len(thetas) else np.empty((0, len(points)))


class LinearClass(FunctionClass):
    """x ↦ w·x (+ θ when bias), w drawn standard normal."""

    def __init__(self, dim: int, bias: bool = False):
        if dim < 1:
            raise InvalidInputError(f"dim must be >= 1, got {dim}")
        self.dim = dim
        self.bias = bias
        self.parameter_dim = dim + int(bias)

    def evaluate(self, theta: np.ndarray, points: np.ndarray) -> np.ndarray:
        values = np.asarray(points, dtype=float) @ theta[: self.dim]
        return values + theta[self.dim] if self.bias else values

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.standard_normal((size, self.parameter_dim))


class ConstantClass(FunctionClass):
    """x ↦ c with c uniform on [low, high]."""

    parameter_dim = 1

    def __init__(self, low: float, high: float):
        if not low <= high:
            raise InvalidInputError(f"need low <= high, got [{low}, {high}]")
        self.low = low
        self.high = high

    def evaluate(self, theta: np.ndarray, points: np.ndarray) -> np.ndarray:
        return np.full(len(points), float(theta[0]))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(self.low, self.high, size=(size, 1))


class SystemClass(FunctionClass):
    """
    Scalar-input systems in the compact parameterization evaluated at control vectors.

    θ packs the n ξ-coefficients, the eigen parameters of the Jordan tag and the
    output offset; points are coefficient vectors g of length k.
    """

    def __init__(
        self,
        family: BasisFamily,
        n: int,
        jordan_tag: Optional[List[JordanBlock]] = None,
        radius: float = 0.999,
        with_offset: bool = True,
    ):
        self.family = family
        self.n = n
        self.jordan_tag = jordan_tag or default_jordan_tag(n)
        if sum(block.dimension for block in self.jordan_tag) != n:
            raise InvalidInputError("jordan_tag block dimensions must sum to n")
        self.eigen_count = sum(block.parameter_count for block in self.jordan_tag)
        self.radius = radius
        self.with_offset = with_offset
        self.parameter_dim = n + self.eigen_count + int(with_offset)

    def split(self, theta: np.ndarray):
        coeffs = theta[: self.n]
        eigen = theta[self.n: self.n + self.eigen_count]
        offset = float(theta[-1]) if self.with_offset else 0.0
        return coeffs, eigen, offset

    def control_weights(self, theta: np.ndarray) -> np.ndarray:
        """(λ_1..λ_k) with output = offset + g·λ."""
        coeffs, eigen, _ = self.split(theta)
        return coeffs @ compact_xi_integrals(list(eigen), self.jordan_tag, self.family)

    def evaluate(self, theta: np.ndarray, points: np.ndarray) -> np.ndarray:
        _, _, offset = self.split(theta)
        return offset + np.asarray(points, dtype=float) @ self.control_weights(theta)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(-self.radius, self.radius, size=(size, self.parameter_dim))


class LossClass(FunctionClass):
    """
    Bounded squared loss of an inner class on labelled points.

    Each point is (x, z) with the target z in the last column; the value is
    loss_eval(f(θ, x), z). Parameters and sampling are the inner class's.
    """

    def __init__(self, inner: FunctionClass):
        self.inner = inner
        self.parameter_dim = inner.parameter_dim

    def evaluate(self, theta: np.ndarray, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.shape[1] < 2:
            raise InvalidInputError("labelled points need at least one input column and a target column")
        return np.asarray(loss_eval(self.inner.evaluate(theta, points[:, :-1]), points[:, -1]), dtype=float)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.inner.sample(rng, size)
