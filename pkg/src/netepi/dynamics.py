"""Network SI/SIS/SIR vector fields and fixed-step trajectory integration.

States live in the per-node box [0, 1]^n with s + x + r = 1 at every node
(r identically zero for SI and SIS). The integrator is classic fourth-order
Runge-Kutta with a fixed step: the systems are smooth and non-stiff at the
scales this package targets, and a fixed step keeps invariant monitoring
deterministic. Roundoff-sized excursions from the box are clamped; anything
larger than EXCURSION_TOL is treated as an integration failure, not noise.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolationError
from .graph import Graph, degree_vector, require_strongly_connected
from .scalar import ModelKind
from .spectral import dominant_eig

EXCURSION_TOL = 1e-9
STATE_TOL = 1e-9
STATIONARY_TOL = 1e-10


@dataclass(frozen=True)
class ModelParams:
    """Model kind plus rates; gamma is absent for SI and required otherwise."""

    kind: ModelKind
    beta: float
    gamma: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.kind is ModelKind.SI:
            if self.gamma is not None:
                raise ValueError("SI has no recovery rate")
        else:
            if self.gamma is None or self.gamma <= 0:
                raise ValueError(f"{self.kind.value} requires gamma > 0")


@dataclass(frozen=True)
class EpidemicState:
    """Per-node susceptible/infected/recovered fractions."""

    s: np.ndarray
    x: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        s, x, r = (np.asarray(v, dtype=float) for v in (self.s, self.x, self.r))
        n = s.shape[0]
        if s.shape != (n,) or x.shape != (n,) or r.shape != (n,):
            raise ValueError("s, x, r must be equal-length vectors")
        for name, v in (("s", s), ("x", x), ("r", r)):
            if np.any(v < -STATE_TOL) or np.any(v > 1 + STATE_TOL):
                raise ValueError(f"{name} has entries outside [0, 1]")
        if np.abs(s + x + r - 1.0).max() > STATE_TOL:
            raise ValueError("s + x + r must equal 1 at every node")
        for v in (s, x, r):
            v.setflags(write=False)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "r", r)

    @property
    def n(self) -> int:
        return self.s.shape[0]


def initial_state(kind: ModelKind, x0, r0=None) -> EpidemicState:
    """Build a consistent starting state from infected (and recovered) fractions."""
    kind = ModelKind(kind)
    x0 = np.asarray(x0, dtype=float)
    if kind is ModelKind.SIR:
        r0 = np.zeros_like(x0) if r0 is None else np.asarray(r0, dtype=float)
    else:
        if r0 is not None and np.any(np.asarray(r0) != 0):
            raise ValueError(f"{kind.value} has no recovered compartment")
        r0 = np.zeros_like(x0)
    return EpidemicState(s=1.0 - x0 - r0, x=x0, r=r0)


@dataclass(frozen=True)
class Trajectory:
    """Recorded times and states of one integration run."""

    times: np.ndarray
    s: np.ndarray  # shape (len(times), n)
    x: np.ndarray
    r: np.ndarray
    params: ModelParams | None
    step_size: float

    def __post_init__(self):
        for arr in (self.times, self.s, self.x, self.r):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return self.times.shape[0]

    @property
    def n(self) -> int:
        return self.s.shape[1]

    def state(self, i: int) -> EpidemicState:
        return EpidemicState(s=self.s[i], x=self.x[i], r=self.r[i])

    @property
    def final_state(self) -> EpidemicState:
        return self.state(len(self) - 1)


def rhs(state: EpidemicState, params: ModelParams, g: Graph):
    """Time derivatives (ds, dx, dr) of the network model at a state."""
    a = g.adjacency
    x = state.x
    force = a @ x
    if params.kind is ModelKind.SI:
        dx = params.beta * (1.0 - x) * force
        return -dx, dx, np.zeros_like(dx)
    if params.kind is ModelKind.SIS:
        dx = params.beta * (1.0 - x) * force - params.gamma * x
        return -dx, dx, np.zeros_like(dx)
    flow = params.beta * state.s * force
    dx = flow - params.gamma * x
    return -flow, dx, params.gamma * x


def _field(params: ModelParams, a: np.ndarray):
    """Vector field on the packed working vector (x for SI/SIS, [s x r] for SIR)."""
    beta = params.beta
    if params.kind is ModelKind.SI:
        return lambda x: beta * (1.0 - x) * (a @ x)
    if params.kind is ModelKind.SIS:
        gamma = params.gamma
        return lambda x: beta * (1.0 - x) * (a @ x) - gamma * x
    gamma = params.gamma
    n = a.shape[0]

    def f(y):
        s, x = y[:n], y[n : 2 * n]
        flow = beta * s * (a @ x)
        return np.concatenate((-flow, flow - gamma * x, gamma * x))

    return f


def default_step(params: ModelParams) -> float:
    rates = [params.beta] + ([params.gamma] if params.gamma is not None else [])
    return 1e-3 / max(rates)


def integrate(
    state0: EpidemicState,
    params: ModelParams,
    g: Graph,
    t_end: float,
    dt: float | None = None,
    record_every: int = 1,
    stop_when_stationary: bool = False,
    stationary_tol: float = STATIONARY_TOL,
) -> Trajectory:
    """Integrate the network model with fixed-step RK4.

    Records the initial state, every record_every-th step, and the final
    state. With stop_when_stationary the run ends early once the sup-norm of
    the right-hand side drops below stationary_tol (the standard surrogate
    for the t -> infinity limits).

    Raises InvariantViolationError if a step leaves [0, 1]^n by more than
    EXCURSION_TOL (meaning dt is too large) or produces NaN.
    """
    if dt is None:
        dt = default_step(params)
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_end < dt:
        raise ValueError("t_end must be at least dt")
    if record_every < 1:
        raise ValueError("record_every must be >= 1")

    a = g.adjacency
    if state0.n != g.n:
        raise ValueError("state and graph dimensions differ")
    f = _field(params, a)
    if params.kind is ModelKind.SIR:
        y = np.concatenate((state0.s, state0.x, state0.r))
    else:
        y = state0.x.copy()

    n_steps = max(1, int(round(t_end / dt)))
    times = [0.0]
    records = [y.copy()]

    for k in range(1, n_steps + 1):
        k1 = f(y)
        if stop_when_stationary and np.abs(k1).max() < stationary_tol:
            break
        k2 = f(y + 0.5 * dt * k1)
        k3 = f(y + 0.5 * dt * k2)
        k4 = f(y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

        if np.any(np.isnan(y)):
            raise InvariantViolationError(f"NaN in state at t = {k * dt:.6g}")
        excursion = max(y.max() - 1.0, -y.min(), 0.0)
        if excursion >= EXCURSION_TOL:
            raise InvariantViolationError(
                f"state left [0, 1] by {excursion:.3g} at t = {k * dt:.6g}; reduce dt"
            )
        np.clip(y, 0.0, 1.0, out=y)

        if k % record_every == 0 or k == n_steps:
            times.append(k * dt)
            records.append(y.copy())
    else:
        return _build_trajectory(times, records, params, g.n, dt)

    # Stationary stop: the loop broke before stepping, so y is the state
    # after step k - 1. Record it unless that instant is already recorded.
    t_stop = (k - 1) * dt
    if times[-1] != t_stop:
        times.append(t_stop)
        records.append(y.copy())
    return _build_trajectory(times, records, params, g.n, dt)


def _build_trajectory(times, records, params, n, dt) -> Trajectory:
    m = np.asarray(records)
    if params.kind is ModelKind.SIR:
        s, x, r = m[:, :n], m[:, n : 2 * n], m[:, 2 * n :]
    else:
        x = m
        s = 1.0 - x
        r = np.zeros_like(x)
    return Trajectory(
        times=np.asarray(times), s=s, x=x, r=r, params=params, step_size=dt
    )


def initial_growth_approx(g: Graph, params: ModelParams, x0, t: float) -> np.ndarray:
    """Dominant-eigenvector approximation of the early outbreak profile.

    For a small initial infection the linearized dynamics give
    x(t) ~ e^{rate t} (v'x0 / v'u) u, with rate beta*lambda_max for SI and
    beta*lambda_max - gamma for SIS/SIR (near the disease-free state).
    """
    require_strongly_connected(g)
    x0 = np.asarray(x0, dtype=float)
    trip = dominant_eig(g.adjacency)
    rate = params.beta * trip.lambda_max
    if params.kind is not ModelKind.SI:
        rate -= params.gamma
    coef = float(trip.v_max @ x0) / float(trip.v_max @ trip.u_max)
    return np.exp(rate * t) * coef * trip.u_max


def late_time_decay_rates(traj: Trajectory, window: tuple[float, float]) -> np.ndarray:
    """Per-node decay slopes of log s_i(t) over a late-time window of an SI run.

    Near full contagion each susceptible fraction decays like
    s_i(t) ~ eps_i e^{-beta d_i (t - T)}, so the returned slopes approximate
    -beta * d_i with d the degree vector.
    """
    if traj.x[-1].min() <= 1.0 - 1e-2:
        raise ValueError("trajectory has not reached near full contagion")
    t_lo, t_hi = window
    if t_lo < traj.times[0] or t_hi > traj.times[-1] or t_lo >= t_hi:
        raise ValueError("window outside trajectory")
    mask = (traj.times >= t_lo) & (traj.times <= t_hi)
    if mask.sum() < 2:
        raise ValueError("window contains fewer than two samples")
    sw = traj.s[mask]
    if np.any(sw <= 0):
        raise ValueError("susceptible fraction hit zero inside the window")
    coeffs = np.polyfit(traj.times[mask], np.log(sw), 1)
    return coeffs[0]


def expected_decay_rates(g: Graph, beta: float) -> np.ndarray:
    """The -beta * d_i slopes that late_time_decay_rates approximates."""
    return -beta * degree_vector(g)


# --- trajectory CSV (t, s_1..s_n, x_1..x_n, r_1..r_n) ----------------------


def write_trajectory_csv(traj: Trajectory, fp) -> None:
    """Write the trajectory in the interchange CSV layout (17 significant digits)."""
    n = traj.n
    header = (
        ["t"]
        + [f"s_{i}" for i in range(1, n + 1)]
        + [f"x_{i}" for i in range(1, n + 1)]
        + [f"r_{i}" for i in range(1, n + 1)]
    )
    fp.write(",".join(header) + "\n")
    for k in range(len(traj)):
        row = np.concatenate(([traj.times[k]], traj.s[k], traj.x[k], traj.r[k]))
        fp.write(",".join(f"{v:.17g}" for v in row) + "\n")


def trajectory_csv_text(traj: Trajectory) -> str:
    buf = io.StringIO()
    write_trajectory_csv(traj, buf)
    return buf.getvalue()


def read_trajectory_csv(fp, params: ModelParams | None = None) -> Trajectory:
    """Read a trajectory written by write_trajectory_csv."""
    header = fp.readline().strip()
    cols = header.split(",")
    if not cols or cols[0] != "t" or (len(cols) - 1) % 3 != 0:
        raise ValueError("not a trajectory CSV: bad header")
    n = (len(cols) - 1) // 3
    data = np.loadtxt(fp, delimiter=",", ndmin=2)
    if data.shape[1] != 1 + 3 * n:
        raise ValueError("trajectory CSV rows do not match the header")
    times = data[:, 0]
    if len(times) > 1 and np.any(np.diff(times) <= 0):
        raise ValueError("trajectory times must be strictly increasing")
    dt = float(np.min(np.diff(times))) if len(times) > 1 else 0.0
    return Trajectory(
        times=times,
        s=data[:, 1 : n + 1],
        x=data[:, n + 1 : 2 * n + 1],
        r=data[:, 2 * n + 1 :],
        params=params,
        step_size=dt,
    )
