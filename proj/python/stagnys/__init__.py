"""Staggered two-grid Nystrom solver for the 2D Helmholtz hypersingular equation."""

from ._core import (  # noqa: F401
    ParametricCurve,
    ScattererConfig,
    DensitySolution,
    RunConfig,
    assemble_calderon_v,
    assemble_system,
    assemble_w,
    bessel_j0,
    bessel_j1,
    bessel_y0,
    bessel_y1,
    c_ell,
    cond2,
    config_to_json,
    default_config,
    ecr,
    ellipse,
    evaluate_potential,
    hankel1_0,
    hankel1_1,
    lu_solve,
    parse_config,
    periodized_bernoulli,
    point_source,
    reduce_eps,
    run_cond,
    run_convergence,
    run_richardson,
    run_sweep_eps,
    solve_once,
    spectral_norm,
)

__version__ = "1.0.0"
