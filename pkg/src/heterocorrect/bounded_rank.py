"""Bounded-rank correction: truncated SVD of the difference matrix.

Solves  min_{A,B} ||(X + A B^T) - Y||_F^2  with A of rank at most K by
keeping the K leading singular triplets of D = Y - X.  A carries the
singular values (A = U_K S_K) so B's columns stay unit norm, mirroring
the scaling convention of the penalized decomposition fit.
"""

from __future__ import annotations

import numpy as np

from .errors import ArgumentError
from .model import METHOD_BOUNDED_RANK, CorrectionModel, HyperParams, SignalMatrix


def canonicalize_signs(A: np.ndarray, B: np.ndarray):
    """Flip factor pairs so each B column's largest-|entry| is nonnegative.

    Leaves A @ B.T unchanged; makes SVD-derived factors reproducible.
    """
    A = A.copy()
    B = B.copy()
    for k in range(B.shape[1]):
        col = B[:, k]
        if col.size and col[np.argmax(np.abs(col))] < 0:
            B[:, k] = -col
            A[:, k] = -A[:, k]
    return A, B


def _truncated_svd_factors(values: np.ndarray, rank: int):
    """Return (A, B, objective) for the best rank-K approximation of values."""
    n, t = values.shape
    if not 0 <= rank <= min(n, t):
        raise ArgumentError(
            f"rank must be in [0, {min(n, t)}] for a {n}x{t} matrix, got {rank}"
        )
    if rank == 0:
        A = np.zeros((n, 0))
        B = np.zeros((t, 0))
        return A, B, float(np.sum(values * values))
    u, s, vt = np.linalg.svd(values, full_matrices=False)
    A = u[:, :rank] * s[:rank]
    B = vt[:rank].T
    A, B = canonicalize_signs(A, B)
    objective = float(np.sum(s[rank:] ** 2))
    return A, B, objective


def fit_bounded_rank(d: SignalMatrix, rank: int) -> CorrectionModel:
    """Fit the rank-K correction to a difference matrix D = Y - X.

    Parameters
    ----------
    d : SignalMatrix
        The difference matrix, N locations by T days.
    rank : int
        Number of singular triplets to keep; 0 <= rank <= min(N, T).

    Returns
    -------
    CorrectionModel
        A = U_K S_K, B = V_K, objective = ||D - A B^T||_F^2.
    """
    A, B, objective = _truncated_svd_factors(d.values, rank)
    return CorrectionModel(
        method=METHOD_BOUNDED_RANK,
        A=A,
        B=B,
        hyper=HyperParams(rank=rank),
        objective_value=objective,
        locations=d.locations,
        dates=d.dates,
    )
