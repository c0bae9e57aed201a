"""Numerical geometry of finite-dimensional normed spaces.

Estimates the constant L'_Y(lam, X) together with the von Neumann-Jordan
constants, Gao's E and the modulus of convexity, and checks the relations
between them.
"""

from .constants import (
    EstimateResult,
    EstimatorConfig,
    SweepResult,
    analytic_delta_profile,
    cnj_prime_objective,
    cnj_ratio,
    delta_objective,
    estimate_cnj,
    estimate_cnj_prime_and_E,
    estimate_delta,
    estimate_lprime_y,
    hilbert_delta,
    ly_delta_lower_bound,
    ly_delta_upper_bound,
    ly_delta_upper_term,
    ly_objective,
    sweep_lprime_y,
)
from .errors import DegenerateDirectionError, InfeasibleError, InputError, UnsupportedDimensionError
from .norms import (
    Lp,
    MaxPlusWeightedL2,
    NormedSpace,
    PolygonGauge,
    c0_truncation,
    catalog,
    lp_space,
    norm_eval,
    polygon_space,
    regular_polygon_vertices,
    sample_sphere,
    sphere_grid,
    unit_vector,
    validate_norm_axioms,
)
from .report import CheckItem, CheckReport
from .theorems import Classification, classify_space, frechet_residual, run_check_suite

__version__ = "0.1.0"
