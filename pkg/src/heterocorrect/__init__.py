"""Heterogeneity correction for panel surveillance signals.

Fits a low-rank, temporally smooth additive correction to an indicator
matrix X against a guide matrix Y, with blocked cross-validation for
hyperparameter selection, a simulation harness, and baseline comparisons.
"""

__version__ = "0.1.0"

from .baselines import AdditiveFactors, compare_baselines, fit_ac, fit_al, fit_br1
from .bounded_rank import fit_bounded_rank
from .errors import (
    AlignmentError,
    ArgumentError,
    DomainError,
    FetchError,
    HeterocorrectError,
    NumericalError,
    ParseError,
    ShapeError,
)
from .fused_lasso import PmdState, dof_fused_lasso, fit_fused_lasso, pmd_component
from .model import (
    CorrectionModel,
    HyperParams,
    SignalMatrix,
    apply_correction,
    daily_dates,
    default_locations,
    mse_on_mask,
    residual_matrix,
)
from .selection import (
    CvRecord,
    FoldLayout,
    GridSpec,
    cross_validate,
    dof_bounded_rank,
    fit_on_training_columns,
    interpolate_temporal_correction,
    make_fold_layouts,
    one_se_select,
    select_min_cv,
)
from .simulation import (
    SimulatedInstance,
    SimulationSpec,
    signal_noise_singular_values,
    simulate_difference,
)
from .spline import SplineBasis, build_spline_basis, dof_basis_spline, fit_basis_spline
from .transforms import TransformSpec, corrected_to_original_scale, to_fit_scale
from .tv import solve_tv_1d
