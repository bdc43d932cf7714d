import numpy as np
import pytest

from netepi import (
    Graph,
    ModelParams,
    ReducibleMatrixError,
    dominant_eig,
    effective_r_series,
    initial_state,
    integrate,
    reproduction_number,
    time_to_subthreshold,
)

from conftest import complete_graph, random_sc_graph, symmetric_pair, two_node


def test_reproduction_number_examples():
    crit = reproduction_number(symmetric_pair(), 1.0, 1.0)
    assert crit.r0 == pytest.approx(1.0, abs=1e-12)
    assert crit.classification == "critical"

    above = reproduction_number(complete_graph(4), 1.0, 2.0)
    assert above.r0 == pytest.approx(1.5, abs=1e-11)
    assert above.classification == "above"

    below = reproduction_number(two_node(), 0.1, 1.0)
    assert below.r0 == pytest.approx(0.4, rel=1e-11)
    assert below.classification == "below"
    assert below.lambda_max == pytest.approx(4.0, rel=1e-11)


def test_reproduction_number_rejects_reducible():
    g = Graph(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ReducibleMatrixError):
        reproduction_number(g, 1.0, 1.0)


def test_scale_covariance():
    rng = np.random.default_rng(21)
    g = random_sc_graph(rng, n=6)
    base = reproduction_number(g, 0.7, 1.3).r0
    for c in (0.5, 2.0, 7.5):
        scaled = reproduction_number(Graph(c * g.adjacency), 0.7, 1.3).r0
        assert scaled == pytest.approx(c * base, rel=1e-12)


def _sir_run(g, beta, gamma, x0, t_end=40.0, dt=0.01, record_every=20):
    return integrate(
        initial_state("SIR", x0),
        ModelParams("SIR", beta, gamma),
        g,
        t_end=t_end,
        dt=dt,
        record_every=record_every,
    )


def test_series_starts_at_r0_and_never_increases():
    g = random_sc_graph(np.random.default_rng(31), n=8)
    beta, gamma = 0.6, 0.4
    traj = _sir_run(g, beta, gamma, np.full(8, 0.02))
    times, values = effective_r_series(traj, g, beta, gamma)
    # s(0) = 0.98 * 1, and diag(c 1) A = c A scales the eigenvalue exactly
    assert values[0] == pytest.approx(
        0.98 * reproduction_number(g, beta, gamma).r0, rel=1e-10
    )
    assert np.all(np.diff(values) <= 1e-10)


def test_series_matches_dense_eigensolver():
    g = random_sc_graph(np.random.default_rng(37), n=6)
    beta, gamma = 0.8, 0.5
    traj = _sir_run(g, beta, gamma, np.full(6, 0.05), t_end=10.0)
    _, values = effective_r_series(traj, g, beta, gamma)
    for k in range(0, len(traj), 17):
        m = traj.s[k][:, None] * g.adjacency
        rho = np.abs(np.linalg.eigvals(m)).max()
        assert values[k] == pytest.approx(beta * rho / gamma, abs=1e-9)


def test_series_final_value_on_symmetric_pair():
    # Symmetric 2-node SIR: lambda_max(diag(s) A) = s at a uniform state,
    # so the settled series value is beta * s_inf / gamma.
    g = symmetric_pair()
    beta, gamma = 2.0, 0.5
    traj = integrate(
        initial_state("SIR", np.full(2, 0.05)),
        ModelParams("SIR", beta, gamma),
        g,
        t_end=80.0,
        dt=0.005,
        record_every=200,
        stop_when_stationary=True,
    )
    _, values = effective_r_series(traj, g, beta, gamma)
    s_inf = traj.s[-1, 0]
    assert values[-1] == pytest.approx(beta * s_inf / gamma, rel=1e-9)


def test_time_to_subthreshold_below_start():
    g = two_node()
    traj = _sir_run(g, 0.1, 1.0, np.full(2, 0.1), t_end=5.0)  # R(0) = 0.4
    assert time_to_subthreshold(traj, g, 0.1, 1.0) == 0.0


def test_time_to_subthreshold_finite_above():
    g = complete_graph(5)
    beta, gamma = 0.5, 0.8  # R0 = 2.5
    traj = _sir_run(g, beta, gamma, np.full(5, 0.05), t_end=40.0)
    tau = time_to_subthreshold(traj, g, beta, gamma)
    assert tau is not None and 0.0 < tau < 40.0
    # interpolation brackets the actual crossing of the recorded series
    times, values = effective_r_series(traj, g, beta, gamma)
    k = np.searchsorted(times, tau)
    assert values[k - 1] >= 1.0 >= values[k]


def test_time_to_subthreshold_absent_when_trajectory_too_short():
    g = complete_graph(5)
    beta, gamma = 0.5, 0.8
    traj = _sir_run(g, beta, gamma, np.full(5, 0.01), t_end=0.5, dt=0.005, record_every=10)
    assert time_to_subthreshold(traj, g, beta, gamma) is None


def test_crossing_later_for_smaller_gamma(g20):
    # smaller recovery rate -> longer above threshold; the ordering is
    # initial-condition dependent, so it is pinned to this graph and a
    # uniform 5% seed where the sweep confirms it
    beta = 0.5
    x0 = np.full(20, 0.05)
    taus = []
    for gamma in (0.1, 0.3, 0.5, 0.7, 0.9):
        traj = _sir_run(g20, beta, gamma, x0, t_end=80.0, dt=0.01, record_every=25)
        tau = time_to_subthreshold(traj, g20, beta, gamma)
        assert tau is not None
        taus.append(tau)
    assert all(a > b for a, b in zip(taus, taus[1:]))


def test_below_threshold_classification_matches_decay():
    # cross-module: 'below' classification co-occurs with decay of v' x(t)
    g = two_node()
    beta, gamma = 0.1, 1.0
    assert reproduction_number(g, beta, gamma).classification == "below"
    trip = dominant_eig(g.adjacency)
    traj = integrate(
        initial_state("SIS", np.full(2, 0.2)),
        ModelParams("SIS", beta, gamma),
        g,
        t_end=10.0,
        dt=0.005,
    )
    weighted = traj.x @ trip.v_max
    assert np.all(np.diff(weighted) < 0)
