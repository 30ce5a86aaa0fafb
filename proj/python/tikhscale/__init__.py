"""Tikhonov regularization with oversmoothing penalties in Hilbert scales."""

from tikhscale._core import (
    DiagonalHilbertScale,
    DiscrepancyConfig,
    IndexFunctionPhi,
    RegularizedSolution,
    SelectionResult,
    SourceSpec,
    SweepRow,
    TestProblem,
    TracePoint,
    a_priori_beta,
    apply_G,
    apply_phi_G,
    auxiliary_element,
    check_interpolation,
    chi,
    chi_inverse,
    forward,
    in_domain,
    make_paper_problem,
    minimize_tikhonov,
    natural_number_scale,
    norm_tau,
    paper_delta_grid,
    perturb,
    phi_of_delta,
    residual_norm,
    run_sweep,
    select_alpha,
)

__all__ = [
    "DiagonalHilbertScale",
    "DiscrepancyConfig",
    "IndexFunctionPhi",
    "RegularizedSolution",
    "SelectionResult",
    "SourceSpec",
    "SweepRow",
    "TestProblem",
    "TracePoint",
    "a_priori_beta",
    "apply_G",
    "apply_phi_G",
    "auxiliary_element",
    "check_interpolation",
    "chi",
    "chi_inverse",
    "forward",
    "in_domain",
    "make_paper_problem",
    "minimize_tikhonov",
    "natural_number_scale",
    "norm_tau",
    "paper_delta_grid",
    "perturb",
    "phi_of_delta",
    "residual_norm",
    "run_sweep",
    "select_alpha",
]

__version__ = "1.0.0"
