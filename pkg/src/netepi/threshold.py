"""Reproduction numbers, threshold classification, and crossing times.

The basic reproduction number of the network models is beta*lambda_max/gamma
with lambda_max the dominant eigenvalue of the adjacency matrix; along an
SIR trajectory the effective reproduction number R(t) uses the shrinking
matrix diag(s(t)) A instead and is non-increasing in time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import Trajectory
from .graph import Graph, require_strongly_connected
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    dominant_eig,
    effective_matrix,
    spectral_radius,
)

CRITICAL_WINDOW = 1e-12


@dataclass(frozen=True)
class ThresholdReport:
    r0: float
    classification: str  # below | above | critical
    lambda_max: float
    crossing_time: float | None = None

    def as_dict(self) -> dict:
        return {
            "r0": self.r0,
            "classification": self.classification,
            "lambda_max": self.lambda_max,
            "crossing_time": self.crossing_time,
        }


def _classify(r0: float) -> str:
    if abs(r0 - 1.0) <= CRITICAL_WINDOW:
        return "critical"
    return "above" if r0 > 1.0 else "below"


def reproduction_number(g: Graph, beta: float, gamma: float) -> ThresholdReport:
    """Basic reproduction number R0 = beta * lambda_max(A) / gamma."""
    if beta <= 0 or gamma <= 0:
        raise ValueError("rates must be positive")
    require_strongly_connected(g)
    lam = dominant_eig(g.adjacency).lambda_max
    r0 = beta * lam / gamma
    return ThresholdReport(r0=r0, classification=_classify(r0), lambda_max=lam)


def effective_r_series(
    traj: Trajectory,
    g: Graph,
    beta: float,
    gamma: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[np.ndarray, np.ndarray]:
    """R(t) = beta * lambda_max(diag(s(t)) A) / gamma at each recorded time.

    Each sample's power iteration is warm-started from the previous sample's
    eigenvector; consecutive effective matrices differ only slightly, so a
    handful of iterations per sample suffices.
    """
    values = np.empty(len(traj))
    vec = None
    for k in range(len(traj)):
        m = effective_matrix(traj.s[k], g)
        lam, vec = spectral_radius(m, tol=tol, max_iter=max_iter, start=vec)
        values[k] = beta * lam / gamma
    return traj.times.copy(), values


def time_to_subthreshold(
    traj: Trajectory, g: Graph, beta: float, gamma: float
) -> float | None:
    """First time the effective reproduction number drops below 1.

    Linearly interpolated between the recorded samples bracketing the
    crossing; 0 if the trajectory starts below threshold; None if the whole
    recorded trajectory stays at or above threshold (extend t_end and rerun).
    """
    times, values = effective_r_series(traj, g, beta, gamma)
    below = np.nonzero(values < 1.0)[0]
    if below.size == 0:
        return None
    k = int(below[0])
    if k == 0:
        return 0.0
    r_prev, r_next = values[k - 1], values[k]
    frac = (r_prev - 1.0) / (r_prev - r_next)
    return float(times[k - 1] + frac * (times[k] - times[k - 1]))


def write_r_series_csv(times: np.ndarray, values: np.ndarray, fp) -> None:
    fp.write("t,R_t\n")
    for t, v in zip(times, values):
        fp.write(f"{t:.17g},{v:.17g}\n")
