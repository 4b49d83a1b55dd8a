"""Shared data model: signal matrices, fitted corrections, scoring helpers.

A :class:`SignalMatrix` is an N x T panel (locations by days) and plays three
roles: the indicator X, the guide Y, and their difference D = Y - X.  A
:class:`CorrectionModel` holds the fitted spatial factors A and temporal
factors B (plus the spline transformation C when applicable); the corrected
indicator is X + A @ temporal_correction().

All containers are immutable after construction and safe to share across
parallel workers; the operations here are pure functions.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import AlignmentError, ArgumentError, ShapeError

SCALE_LINEAR = "linear"
SCALE_LOG = "log"

METHOD_BOUNDED_RANK = "bounded_rank"
METHOD_FUSED_LASSO = "fused_lasso"
METHOD_BASIS_SPLINE = "basis_spline"
METHODS = (METHOD_BOUNDED_RANK, METHOD_FUSED_LASSO, METHOD_BASIS_SPLINE)


def _as_matrix(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got {arr.ndim} dimensions")
    return arr


@dataclass(frozen=True)
class SignalMatrix:
    """N x T panel of signal values with location and daily date labels.

    Parameters
    ----------
    values : array_like, shape (N, T)
        Finite real values; one row per location, one column per day.
    locations : sequence of str
        N location identifiers, in row order.
    dates : sequence of datetime.date
        T calendar dates, strictly increasing in steps of exactly one day.
    scale : {"linear", "log"}
        Whether values are raw or log-transformed.
    """

    values: np.ndarray
    locations: tuple
    dates: tuple
    scale: str = SCALE_LINEAR

    def __post_init__(self):
        arr = _as_matrix(self.values)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "locations", tuple(str(g) for g in self.locations))
        object.__setattr__(self, "dates", tuple(self.dates))
        n, t = arr.shape
        if len(self.locations) != n:
            raise ShapeError(
                f"row axis: {n} rows but {len(self.locations)} location labels"
            )
        if len(self.dates) != t:
            raise ShapeError(
                f"column axis: {t} columns but {len(self.dates)} date labels"
            )
        for d in self.dates:
            if not isinstance(d, dt.date):
                raise ArgumentError(f"dates must be datetime.date, got {type(d)!r}")
        one_day = dt.timedelta(days=1)
        for i in range(1, t):
            if self.dates[i] - self.dates[i - 1] != one_day:
                raise ArgumentError(
                    f"dates must advance by exactly one day; gap between "
                    f"{self.dates[i - 1]} and {self.dates[i]}"
                )
        if self.scale not in (SCALE_LINEAR, SCALE_LOG):
            raise ArgumentError(f"unknown scale {self.scale!r}")
        if not np.all(np.isfinite(arr)):
            bad = np.argwhere(~np.isfinite(arr))[0]
            raise ArgumentError(
                f"values must be finite; found non-finite entry at "
                f"row {bad[0]}, column {bad[1]}"
            )

    @property
    def n_locations(self) -> int:
        return self.values.shape[0]

    @property
    def n_days(self) -> int:
        return self.values.shape[1]

    def with_values(self, values, scale: Optional[str] = None) -> "SignalMatrix":
        """Copy of this matrix with new values (same labels)."""
        return SignalMatrix(
            values, self.locations, self.dates, self.scale if scale is None else scale
        )


@dataclass(frozen=True)
class HyperParams:
    """Model hyperparameters; which fields matter depends on the method."""

    rank: int = 0
    lam: Optional[float] = None  # fused lasso penalty weight
    knot_interval_days: Optional[int] = None  # basis spline knot spacing
    spline_degree: int = 3

    def __post_init__(self):
        if self.rank < 0:
            raise ArgumentError(f"rank must be >= 0, got {self.rank}")
        if self.lam is not None and self.lam < 0:
            raise ArgumentError(f"lambda must be >= 0, got {self.lam}")
        if self.knot_interval_days is not None and self.knot_interval_days < 1:
            raise ArgumentError(
                f"knot_interval_days must be >= 1, got {self.knot_interval_days}"
            )
        if self.spline_degree < 0:
            raise ArgumentError(f"spline_degree must be >= 0, got {self.spline_degree}")


@dataclass(frozen=True)
class CorrectionModel:
    """A fitted additive correction X~ = X + A @ temporal_correction().

    A is N x K.  For bounded-rank and fused-lasso fits B is T x K and the
    temporal correction is B.T; for basis-spline fits B is L x K (spline
    coefficients) and the temporal correction is B.T @ C with C the L x T
    spline transformation matrix.
    """

    method: str
    A: np.ndarray
    B: np.ndarray
    hyper: HyperParams
    C: Optional[np.ndarray] = None
    objective_value: float = 0.0
    locations: Optional[tuple] = None
    dates: Optional[tuple] = None
    spline_knots: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ArgumentError(f"unknown method {self.method!r}")
        A = _as_matrix(self.A)
        B = _as_matrix(self.B)
        A.setflags(write=False)
        B.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        if A.shape[1] != B.shape[1]:
            raise ShapeError(
                f"factor axis: A has {A.shape[1]} columns, B has {B.shape[1]}"
            )
        if self.method == METHOD_BASIS_SPLINE:
            if self.C is None:
                raise ArgumentError("basis-spline models require the C matrix")
            C = _as_matrix(self.C)
            C.setflags(write=False)
            object.__setattr__(self, "C", C)
            if C.shape[0] != B.shape[0]:
                raise ShapeError(
                    f"basis axis: B has {B.shape[0]} rows, C has {C.shape[0]}"
                )
        elif self.C is not None:
            raise ArgumentError("C is only meaningful for basis-spline models")
        if self.locations is not None:
            object.__setattr__(self, "locations", tuple(self.locations))
        if self.dates is not None:
            object.__setattr__(self, "dates", tuple(self.dates))

    @property
    def rank(self) -> int:
        return self.A.shape[1]

    @property
    def n_locations(self) -> int:
        return self.A.shape[0]

    @property
    def n_days(self) -> int:
        """Number of time points the temporal correction spans."""
        if self.method == METHOD_BASIS_SPLINE:
            return self.C.shape[1]
        return self.B.shape[0]

    def temporal_correction(self) -> np.ndarray:
        """K x T temporal correction rows (B.T, or B.T @ C for splines)."""
        if self.method == METHOD_BASIS_SPLINE:
            return self.B.T @ self.C
        return self.B.T.copy()

    def correction_matrix(self) -> np.ndarray:
        """The full N x T additive correction A @ temporal_correction()."""
        return self.A @ self.temporal_correction()


def apply_correction(x: SignalMatrix, model: CorrectionModel) -> SignalMatrix:
    """Apply a fitted correction: X~ = X + A B^T (A B^T C for splines).

    The input must have the shape the model was fit on and be expressed on
    the scale the model was fit on (the caller's responsibility; models do
    not record the scale).
    """
    if model.n_locations != x.n_locations:
        raise ShapeError(
            f"row axis: matrix has {x.n_locations} locations, "
            f"model was fit on {model.n_locations}"
        )
    if model.n_days != x.n_days:
        raise ShapeError(
            f"column axis: matrix has {x.n_days} days, "
            f"model covers {model.n_days}"
        )
    return x.with_values(x.values + model.correction_matrix())


def residual_matrix(x: SignalMatrix, y: SignalMatrix) -> SignalMatrix:
    """Difference matrix D = Y - X, used to detect heterogeneity."""
    if x.values.shape != y.values.shape:
        raise ShapeError(
            f"shape mismatch: x is {x.values.shape}, y is {y.values.shape}"
        )
    if x.locations != y.locations:
        i = next(
            k for k, (a, b) in enumerate(zip(x.locations, y.locations)) if a != b
        )
        raise AlignmentError(
            f"location mismatch at row {i}: {x.locations[i]!r} vs {y.locations[i]!r}"
        )
    if x.dates != y.dates:
        i = next(k for k, (a, b) in enumerate(zip(x.dates, y.dates)) if a != b)
        raise AlignmentError(
            f"date mismatch at column {i}: {x.dates[i]} vs {y.dates[i]}"
        )
    if x.scale != y.scale:
        raise AlignmentError(f"scale mismatch: {x.scale!r} vs {y.scale!r}")
    return x.with_values(y.values - x.values)


def mse_on_mask(xt: SignalMatrix, y: SignalMatrix, mask: Iterable) -> float:
    """Mean squared error between two matrices over a set of (row, col) cells."""
    cells = list(mask)
    if not cells:
        raise ArgumentError("mask must contain at least one (row, column) index")
    rows = np.fromiter((c[0] for c in cells), dtype=np.intp)
    cols = np.fromiter((c[1] for c in cells), dtype=np.intp)
    n, t = xt.values.shape
    if rows.min() < 0 or rows.max() >= n or cols.min() < 0 or cols.max() >= t:
        raise ArgumentError("mask contains out-of-range indices")
    diff = xt.values[rows, cols] - y.values[rows, cols]
    return float(np.mean(diff * diff))


def default_locations(n: int) -> list:
    """Synthetic location labels loc000, loc001, ... for generated data."""
    return [f"loc{i:03d}" for i in range(n)]


def daily_dates(t: int, start: dt.date = dt.date(2020, 1, 1)) -> list:
    """T consecutive daily dates starting at `start`."""
    return [start + dt.timedelta(days=i) for i in range(t)]
