"""Entanglement Page curves of Gaussian boson sampling output states.

Analytic averages of Renyi-alpha (integer alpha >= 2) and von Neumann
entanglement entropies over Haar-random passive circuits acting on
squeezed-vacuum inputs, the corresponding small/large squeezing limits,
and a seeded Monte-Carlo pipeline that cross-validates the formulas.
All entropies are in nats.
"""

from .haar import haar_unitary, sample_generator
from .states import (
    SqueezingConfig,
    build_M,
    build_W,
    full_covariance_general,
    reduce_modes,
    reduced_covariance_equal,
    reduced_covariance_general,
    symplectic_form,
    trW_moments,
)
from .symplectic import symplectic_eigenvalues
from .entropy import (
    renyi_entropy,
    renyi_entropy_factored,
    vn_mode_entropy,
    von_neumann_entropy,
)
from .specfun import SeriesResult, catalan, hyp2f1_terminating, hyp2f1_vn, G, H
from .pagecurve import (
    ASYMPTOTIC,
    PageCurveValue,
    TruncationCapError,
    expected_trW,
    page_average,
    renyi2_average,
    renyi_average,
    renyi_large_s_limit,
    renyi_small_s_limit,
    renyi_unequal_small,
    vn_large_s_limit,
    vn_series_coefficients,
    vn_series_constant,
    vn_small_s_limit,
    von_neumann_average,
)
from .montecarlo import (
    ExperimentPlan,
    SampleFailure,
    SampleRecord,
    Summary,
    estimate_Vd,
    purity_symmetry_check,
    run_experiment,
    s2_variance_identity,
    variance_trend,
)

__version__ = "0.1.0"

__all__ = [
    "ASYMPTOTIC",
    "ExperimentPlan",
    "G",
    "H",
    "PageCurveValue",
    "SampleFailure",
    "SampleRecord",
    "SeriesResult",
    "SqueezingConfig",
    "Summary",
    "TruncationCapError",
    "build_M",
    "build_W",
    "catalan",
    "estimate_Vd",
    "expected_trW",
    "full_covariance_general",
    "haar_unitary",
    "hyp2f1_terminating",
    "hyp2f1_vn",
    "page_average",
    "purity_symmetry_check",
    "reduce_modes",
    "reduced_covariance_equal",
    "reduced_covariance_general",
    "renyi2_average",
    "renyi_average",
    "renyi_entropy",
    "renyi_entropy_factored",
    "renyi_large_s_limit",
    "renyi_small_s_limit",
    "renyi_unequal_small",
    "run_experiment",
    "s2_variance_identity",
    "sample_generator",
    "symplectic_eigenvalues",
    "symplectic_form",
    "trW_moments",
    "variance_trend",
    "vn_large_s_limit",
    "vn_mode_entropy",
    "vn_series_coefficients",
    "vn_series_constant",
    "vn_small_s_limit",
    "von_neumann_average",
    "von_neumann_entropy",
]
