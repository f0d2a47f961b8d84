"""Independent oracles: quadrature of the explicit integrand and RK4 simulation."""

import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

import numpy as np

from ..integrals import integrate_quadrature
from ..utils import INTEGRATION, InvalidInputError, SimulationDivergedError, get_logger
from .models import BasisFamily, ControlMatrix, FullSystemParams
from .response import check_dimensions

logger = get_logger(__name__)

MIN_STEPS = 100


@dataclass
class LinearRealization:
    """ẋ = A x + B u, y = C x, x(0) = x0 with scalar input u."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    x0: Optional[np.ndarray] = None

    def __post_init__(self):
        self.A = np.atleast_2d(np.asarray(self.A, dtype=float))
        self.B = np.asarray(self.B, dtype=float).reshape(-1)
        self.C = np.asarray(self.C, dtype=float).reshape(-1)
        n = self.A.shape[0]
        self.x0 = np.zeros(n) if self.x0 is None else np.asarray(self.x0, dtype=float).reshape(-1)
        if self.A.shape != (n, n) or self.B.shape != (n,) or self.C.shape != (n,) or self.x0.shape != (n,):
            raise InvalidInputError(f"inconsistent realization shapes for state dimension {n}")

    def rhs(self, t: float, x: np.ndarray, u: float) -> np.ndarray:
        return self.A @ x + self.B * u

    def output(self, x: np.ndarray) -> float:
        return float(self.C @ x)


def oscillator_realization(lam: float) -> LinearRealization:
    """ẋ1 = x2, ẋ2 = −λ² x1 + u, y = −x1, zero initial state."""
    return LinearRealization(
        A=[[0.0, 1.0], [-lam * lam, 0.0]],
        B=[0.0, 1.0],
        C=[-1.0, 0.0],
    )


def oracle_rk4(
    realization: LinearRealization,
    u: Callable[[float], float],
    tau: float,
    steps: int,
    breakpoints: Iterable[float] = (),
) -> float:
    """
    Classical fixed-step RK4 from 0 to tau, returning the declared output.

    Breakpoints inside (0, tau) split the run into segments; each segment gets a
    share of the steps proportional to its length and evaluates u one-sidedly at
    its ends, so piecewise-smooth inputs keep fourth-order accuracy.

    Args:
        realization: Right-hand side and output map.
        u: Scalar control as a function of time.
        tau: Final time.
        steps: Total number of steps, at least 100.
        breakpoints: Discontinuity times of u.

    Returns:
        y(tau).
    """
    if steps < MIN_STEPS:
        raise InvalidInputError(f"steps must be >= {MIN_STEPS}, got {steps}")
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidInputError(f"tau must be a positive finite number, got {tau}")

    x = realization.x0.copy()
    for lo, hi in _segments(tau, breakpoints):
        count = max(1, round(steps * (hi - lo) / tau))
        h = (hi - lo) / count
        nudge = (hi - lo) * 1e-12

        def u_seg(t: float, lo=lo, hi=hi, nudge=nudge) -> float:
            return u(min(max(t, lo + nudge), hi - nudge))

        for step in range(count):
            t = lo + step * h
            k1 = realization.rhs(t, x, u_seg(t))
            k2 = realization.rhs(t + h / 2, x + h / 2 * k1, u_seg(t + h / 2))
            k3 = realization.rhs(t + h / 2, x + h / 2 * k2, u_seg(t + h / 2))
            k4 = realization.rhs(t + h, x + h * k3, u_seg(t + h))
            x = x + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            if not np.all(np.isfinite(x)):
                raise SimulationDivergedError(f"state became non-finite at t = {t + h:.6g}")

    return realization.output(x)


def response_quadrature(
    params: FullSystemParams,
    G: ControlMatrix,
    family: BasisFamily,
    tau: float = 1.0,
    rel_tol: float = INTEGRATION["quad_rel_tol"],
) -> np.ndarray:
    """Quadrature of the explicit integrand h_κ + ∫ Σ α ξ ω g, one integral per output."""
    check_dimensions(params.m, G, family)
    coeffs = params.coeff_array()
    g = G.array()
    n = params.n
    rows = params.eigen_array()
    powers = np.arange(n)

    def xi_values(t: float) -> np.ndarray:
        # ξ[r, ℓ] at time t
        envelope = t ** powers
        out = np.empty((n, 2 * n))
        for r in range(n):
            a, b = rows[r, 0], rows[r, 1]
            scale = math.exp(a * t) * envelope
            out[r, :n] = scale * math.cos(b * t)
            out[r, n:] = scale * math.sin(b * t)
        return out

    def omega_values(t: float) -> np.ndarray:
        return np.array([float(omega(t)) for omega in family.elements])

    outputs = []
    for kappa in range(params.p):
        weights = coeffs[:, :, :, kappa]

        def integrand(t: float, weights=weights) -> float:
            return float(np.einsum("irl,rl,ij,j->", weights, xi_values(t), g, omega_values(t)))

        outputs.append(params.offset[kappa] + integrate_quadrature(integrand, tau, rel_tol))
    return np.asarray(outputs)


def _segments(tau: float, breakpoints: Iterable[float]) -> List[Tuple[float, float]]:
    cuts = sorted({float(b) for b in breakpoints if 0.0 < b < tau})
    edges = [0.0] + cuts + [tau]
    return list(zip(edges[:-1], edges[1:]))
