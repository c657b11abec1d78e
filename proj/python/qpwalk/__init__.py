"""Absorption law of the zero-drift quarter-plane walk.

Thin package over the compiled module: dynamic-programming reference law,
contour-integral generating functions, and voter block-dynamics Monte Carlo.
"""

try:
    from ._qpwalk import *  # noqa: F401,F403
    from ._qpwalk import __doc__ as _mod_doc
except ImportError:  # build-tree layout used by the ctest smoke run
    from _qpwalk import *  # noqa: F401,F403
    from _qpwalk import __doc__ as _mod_doc

__all__ = [
    "dp_absorption",
    "survival_tail",
    "swap_symmetry_check",
    "estimate_distribution",
    "interfaces",
    "branch_points",
    "Y_branch",
    "cgf",
    "mu",
    "t_root",
    "chebyshev_U",
    "group_order_check",
    "curve_sample",
    "h_parts",
    "h_total",
    "G_truncated",
    "functional_eq_residual",
    "boundary_residual",
    "extract_coefficients",
    "asymptotic_constant",
    "tau_tail_constant",
    "pringsheim_transfer",
    "tail_fit",
    "singular_coefficient_fit",
    "slit_integral_identity",
    "log_singularity_fit",
    "run_criterion",
]
