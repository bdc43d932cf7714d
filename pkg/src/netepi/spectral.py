"""Dominant eigenvalue and eigenvectors of nonnegative matrices.

Everything here is powered by shifted power iteration: for an irreducible
matrix with an all-zero diagonal (e.g. bipartite contact graphs) plain power
iteration can oscillate between periodic classes, so we iterate on m + I and
subtract the shift from the reported eigenvalue. The shift is skipped when
the diagonal already has a positive entry (the matrix is then aperiodic).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonConvergenceError
from .graph import Graph, require_strongly_connected

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000


@dataclass(frozen=True)
class SpectralTriple:
    """Dominant eigenvalue with 1-normalized positive left/right eigenvectors."""

    lambda_max: float
    v_max: np.ndarray  # left:  v' A = lambda v'
    u_max: np.ndarray  # right: A u  = lambda u


def _shift_for(m: np.ndarray) -> float:
    # A positive diagonal entry already breaks periodicity.
    return 0.0 if np.any(np.diag(m) > 0) else 1.0


def _scaled_shift_for(m: np.ndarray) -> float:
    """Shift proportional to the matrix scale.

    A fixed unit shift would swamp matrices with tiny spectral radius (late
    SIR states give diag(s) A close to zero) and collapse the relative
    spectral gap of the shifted matrix; half the largest row sum keeps the
    gap, and therefore the iteration count, scale-invariant.
    """
    if np.any(np.diag(m) > 0):
        return 0.0
    return float(m.sum(axis=1).max()) / 2.0


def _prepare_start(n: int, start) -> np.ndarray:
    if start is None:
        return np.full(n, 1.0 / n)
    x = np.asarray(start, dtype=float)
    if x.shape != (n,) or np.any(x < 0) or x.sum() <= 0:
        raise ValueError("start vector must be nonnegative, nonzero, length n")
    x = x / x.sum()
    if np.any(x == 0):
        # Keep every entry positive so no invariant class is missed.
        x = 0.99 * x + 0.01 / n
    return x


def _power_iteration(m, shift, tol, max_iter, start=None, relative_to_shifted=False):
    """Iterate x -> (m + shift I) x / ||.||_1 until the eigen-residual passes tol.

    Returns (lambda_of_m, x, iterations). The residual test is
    ||M x - lambda_M x||_inf <= tol * lambda, with lambda the eigenvalue of m
    itself, or of the shifted matrix when relative_to_shifted is set (the
    latter stays well-defined when the spectral radius of m is zero).
    """
    n = m.shape[0]
    m_shifted = m + shift * np.eye(n) if shift else m
    x = _prepare_start(n, start)
    for it in range(1, max_iter + 1):
        y = m_shifted @ x
        lam_shifted = y.sum()  # equals ||y||_1 for nonnegative y, unit-1-norm x
        lam = lam_shifted - shift
        residual = np.abs(y - lam_shifted * x).max()
        target = lam_shifted if relative_to_shifted else lam
        if target > 0 and residual <= tol * target:
            return lam, x / x.sum(), it
        if lam_shifted <= 0:  # m annihilates x entirely: spectral radius 0
            return 0.0, x, it
        x = y / lam_shifted
    raise NonConvergenceError(
        f"power iteration did not reach tol={tol} within {max_iter} iterations"
    )


def dominant_eig(
    m: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    check_irreducible: bool = True,
) -> SpectralTriple:
    """Dominant eigenvalue and left/right eigenvectors of an irreducible matrix.

    Runs shifted power iteration on m (for u_max) and on its transpose (for
    v_max), both from the uniform start vector. Raises ReducibleMatrixError
    if the irreducibility pre-check fails and NonConvergenceError if the
    iteration budget runs out.
    """
    m = np.asarray(m, dtype=float)
    if np.any(m < 0):
        raise ValueError("matrix must be nonnegative")
    if check_irreducible:
        require_strongly_connected(Graph(m))
    shift = _shift_for(m)
    # Converge tighter than tol so both residuals hold against the single
    # reported eigenvalue.
    lam_u, u, _ = _power_iteration(m, shift, tol / 4, max_iter)
    _, v, _ = _power_iteration(m.T, shift, tol / 4, max_iter)
    return SpectralTriple(lambda_max=lam_u, v_max=v, u_max=u)


def spectral_radius(
    m: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    start=None,
) -> tuple[float, np.ndarray]:
    """Spectral radius of a nonnegative (possibly reducible) matrix.

    Same shifted power iteration as dominant_eig but without the
    irreducibility pre-check, with the convergence test taken relative to the
    shifted eigenvalue so that matrices with tiny or zero spectral radius are
    handled. Returns (lambda, right_vector); the vector is nonnegative but not
    necessarily unique and is mainly useful for warm-starting the next call.
    """
    m = np.asarray(m, dtype=float)
    if np.any(m < 0):
        raise ValueError("matrix must be nonnegative")
    try:
        lam, x, _ = _power_iteration(
            m, _scaled_shift_for(m), tol, max_iter, start=start, relative_to_shifted=True
        )
    except NonConvergenceError:
        # Reducible matrices whose dominant block structure is defective
        # (e.g. diag(s) A with a zeroed row) make power iteration crawl;
        # fall back to a dense solve so boundary states never fail.
        lam = float(np.abs(np.linalg.eigvals(m)).max())
        x = np.full(m.shape[0], 1.0 / m.shape[0])
    return lam, x


def effective_matrix(s: np.ndarray, g: Graph) -> np.ndarray:
    """diag(s) A: the contact matrix as seen by the currently susceptible."""
    s = np.asarray(s, dtype=float)
    if s.shape != (g.n,):
        raise ValueError(f"state vector has shape {s.shape}, expected ({g.n},)")
    if np.any(s < 0) or np.any(s > 1):
        raise ValueError("state vector entries must lie in [0, 1]")
    return s[:, None] * g.adjacency


__all__ = [
    "SpectralTriple",
    "dominant_eig",
    "spectral_radius",
    "effective_matrix",
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
]
