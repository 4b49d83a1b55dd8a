"""Fused-lasso correction via rank-1 penalized matrix decomposition.

Solves  min ||(X + A B^T) - Y||_F^2 + lam * ||Delta_t B||_1  greedily:
K rank-1 components are extracted from Z = Y - X by alternating a
normalized left-factor update with an exact 1-d total variation solve on
the right factor, deflating Z after each component.

With lam = 0 the total variation solve is the identity, the alternation
reduces to power iteration, and the fit coincides with the truncated SVD
of the bounded-rank model.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import ArgumentError
from .model import METHOD_FUSED_LASSO, CorrectionModel, HyperParams, SignalMatrix
from .tv import solve_tv_1d

DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class PmdState:
    """State of the rank-1 decomposition for one component.

    Z is the current deflated residual; u (length N, unit norm) and
    v (length T, unit norm) are the factor estimates; d = u' Z v >= 0 at
    convergence.  A null component (v collapsed to zero) has u = v = 0
    and d = 0 and is flagged converged.
    """

    Z: np.ndarray
    u: Optional[np.ndarray] = None
    v: Optional[np.ndarray] = None
    d: float = 0.0
    k: int = 0
    iterations: int = 0
    converged: bool = False


def _null_state(state: PmdState, iterations: int) -> PmdState:
    n, t = state.Z.shape
    return replace(
        state,
        u=np.zeros(n),
        v=np.zeros(t),
        d=0.0,
        iterations=iterations,
        converged=True,
    )


def pmd_component(
    state: PmdState,
    lam: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    tv_method: str = "direct",
) -> PmdState:
    """Extract one penalized rank-1 component from state.Z.

    v starts at the top right singular vector of Z (deterministic), then
    u <- Z v / ||Z v|| and v <- tv_prox(Z' u, lam) / ||.|| alternate until
    ||v_new - v_old|| <= tol or max_iter sweeps.  Returns a new state with
    u, v, d filled in; Z is left untouched (the caller deflates).
    """
    Z = state.Z
    if not np.any(Z):
        return _null_state(state, 0)
    # deterministic warm start: top right singular vector
    v = np.linalg.svd(Z, full_matrices=False)[2][0]
    u = None
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        zv = Z @ v
        norm_zv = np.linalg.norm(zv)
        if norm_zv == 0.0:
            return _null_state(state, iterations)
        u = zv / norm_zv
        raw = solve_tv_1d(Z.T @ u, lam, method=tv_method)
        norm_raw = np.linalg.norm(raw)
        if norm_raw == 0.0:
            return _null_state(state, iterations)
        v_new = raw / norm_raw
        delta = np.linalg.norm(v_new - v)
        v = v_new
        if delta <= tol:
            converged = True
            break
    d = float(u @ Z @ v)
    return replace(state, u=u, v=v, d=d, iterations=iterations, converged=converged)


def fit_fused_lasso(
    d: SignalMatrix,
    rank: int,
    lam: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    tv_method: str = "direct",
) -> CorrectionModel:
    """Fit K penalized rank-1 components with deflation.

    A[:, k] = d_k u_k and B[:, k] = v_k; null components leave zero
    columns.  The stored objective is the Frobenius residual plus
    lam * ||Delta_t B||_1.
    """
    values = d.values
    n, t = values.shape
    if not 0 <= rank <= min(n, t):
        raise ArgumentError(
            f"rank must be in [0, {min(n, t)}] for a {n}x{t} matrix, got {rank}"
        )
    if lam < 0:
        raise ArgumentError(f"lambda must be >= 0, got {lam}")
    A = np.zeros((n, rank))
    B = np.zeros((t, rank))
    Z = values.copy()
    for k in range(rank):
        comp = pmd_component(
            PmdState(Z=Z, k=k), lam, tol=tol, max_iter=max_iter, tv_method=tv_method
        )
        if comp.d == 0.0:
            continue  # null component: zero columns, Z unchanged
        u, v = comp.u, comp.v
        # sign convention: B column's largest-|entry| nonnegative
        if v[np.argmax(np.abs(v))] < 0:
            u, v = -u, -v
        A[:, k] = comp.d * u
        B[:, k] = v
        Z = Z - comp.d * np.outer(u, v)
    penalty = lam * float(np.sum(np.abs(np.diff(B, axis=0))))
    residual = values - A @ B.T
    objective = float(np.sum(residual * residual)) + penalty
    return CorrectionModel(
        method=METHOD_FUSED_LASSO,
        A=A,
        B=B,
        hyper=HyperParams(rank=rank, lam=lam),
        objective_value=objective,
        locations=d.locations,
        dates=d.dates,
    )


def dof_fused_lasso(model: CorrectionModel, zero_tol: float = 1e-8) -> int:
    """Degrees of freedom K(N-1) + count of successive differences of B
    exceeding zero_tol in absolute value, over all K columns."""
    if model.method != METHOD_FUSED_LASSO:
        raise ArgumentError(
            f"dof_fused_lasso requires a fused-lasso model, got {model.method !r}"
        )
    k = model.rank
    n = model.n_locations
    jumps = int(np.sum(np.abs(np.diff(model.B, axis=0)) > zero_tol))
    return k * (n - 1) + jumps
