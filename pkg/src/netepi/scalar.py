"""Scalar (well-mixed population) SI, SIS, and SIR models.

Closed forms where they exist, a bisection solve for the SIR final size, and
the raw right-hand sides. These double as oracles for the network models:
on a symmetric graph with a symmetric initial state every node follows the
scalar solution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BelowThresholdError


class ModelKind(str, enum.Enum):
    SI = "SI"
    SIS = "SIS"
    SIR = "SIR"


@dataclass(frozen=True)
class ScalarParams:
    """Infection rate beta (1/time) and recovery rate gamma (1/time, None for SI)."""

    beta: float
    gamma: float | None = None

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.gamma is not None and self.gamma <= 0:
            raise ValueError("gamma must be positive")


def _check_fraction(x0):
    if np.any(np.asarray(x0) < 0) or np.any(np.asarray(x0) > 1):
        raise ValueError("initial fraction must lie in [0, 1]")


def si_closed_form(x0: float, beta: float, t):
    """Infected fraction of the scalar SI model at time(s) t.

    Evaluates x0 e^{bt} / (1 - x0 + x0 e^{bt}) in the equivalent form
    x0 / ((1 - x0) e^{-bt} + x0) so large t cannot overflow.
    """
    _check_fraction(x0)
    t = np.asarray(t, dtype=float)
    if x0 == 0.0:
        out = np.zeros_like(t)
    else:
        out = x0 / ((1.0 - x0) * np.exp(-beta * t) + x0)
    return float(out) if out.ndim == 0 else out


def sis_closed_form(x0: float, beta: float, gamma: float, t):
    """Infected fraction of the scalar SIS model at time(s) t.

    The beta == gamma case is the analytic limit x0 / (1 + beta x0 t); for
    beta != gamma the closed form is rearranged so the exponential always
    decays, whichever of the two rates is larger.
    """
    _check_fraction(x0)
    t = np.asarray(t, dtype=float)
    if beta == gamma:
        out = x0 / (1.0 + beta * x0 * t)
    elif beta > gamma:
        decay = np.exp(-(beta - gamma) * t)
        out = (beta - gamma) * x0 / (beta * x0 - decay * (gamma - beta * (1.0 - x0)))
    else:
        decay = np.exp((beta - gamma) * t)  # beta < gamma: exponent negative
        out = (beta - gamma) * x0 * decay / (beta * x0 * decay - (gamma - beta * (1.0 - x0)))
    out = np.asarray(out)
    return float(out) if out.ndim == 0 else out


def sir_rinf(s0: float, r0: float, beta: float, gamma: float, tol: float = 1e-12) -> float:
    """Final recovered fraction of the scalar SIR model.

    Solves 1 - r = s0 e^{-(beta/gamma)(r - r0)} for r in [r0, 1] by bisection;
    the bracket always contains exactly one root under the preconditions.
    """
    if s0 <= 0 or r0 < 0 or s0 + r0 > 1:
        raise ValueError("need s0 > 0, r0 >= 0, s0 + r0 <= 1")
    x0 = 1.0 - s0 - r0
    if x0 == 0.0:
        return r0

    ratio = beta / gamma

    def g(r):
        return 1.0 - r - s0 * math.exp(-ratio * (r - r0))

    lo, hi = r0, 1.0  # g(lo) = x0 > 0, g(hi) = -s0 e^{...} < 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sir_xmax(s0: float, x0: float, beta: float, gamma: float) -> float:
    """Peak infected fraction of an above-threshold scalar SIR epidemic.

    Only valid for beta s0 / gamma >= 1 (at equality the peak is at t = 0 and
    the formula collapses to x0).
    """
    if s0 <= 0 or x0 <= 0 or s0 + x0 > 1:
        raise ValueError("need s0 > 0, x0 > 0, s0 + x0 <= 1")
    rho = gamma / beta
    if s0 < rho:
        raise BelowThresholdError(
            f"beta*s0/gamma = {s0 / rho:.6g} < 1: infections only decay, no interior peak"
        )
    return x0 + s0 - rho * (math.log(s0) + 1.0 - math.log(rho))


def scalar_rhs(kind: ModelKind, state, params: ScalarParams):
    """Right-hand side of the scalar model ODEs.

    SI and SIS take the infected fraction x and return dx/dt; SIR takes
    (s, x, r) and returns (ds/dt, dx/dt, dr/dt).
    """
    kind = ModelKind(kind)
    beta = params.beta
    if kind is ModelKind.SI:
        x = state
        return beta * (1.0 - x) * x
    if kind is ModelKind.SIS:
        x = state
        return beta * (1.0 - x) * x - params.gamma * x
    s, x, _ = state
    flow = beta * s * x
    return (-flow, flow - params.gamma * x, params.gamma * x)
