"""Norm geometry in finite dimensions: one-sided norm derivatives, Birkhoff
orthogonality cones, the gamma constant, and symmetry classification on the
unit spheres of l1^n and linf^n."""

from normgeo._core import (
    DerivativeTriple,
    DerivMethod,
    GammaMethod,
    GammaResult,
    MixPiece,
    MonotoneReport,
    OracleResult,
    OrthoCone,
    RhoCone,
    Space,
    SymmetryClass,
    SymmetryProbeReport,
    UnsReport,
    UnsupportedFamily,
    GAMMA_L1N,
    GAMMA_LINFN,
    alpha_left,
    alpha_right,
    check_uns_relation,
    classify_l1,
    classify_l1_exact,
    classify_linf,
    classify_linf_exact,
    derivative,
    derivative_numeric,
    e_constant,
    gamma_closed_form_2ngon,
    gamma_estimate,
    gamma_polyhedral_2d,
    is_birkhoff,
    is_rho_orthogonal,
    is_smooth_point,
    james_constant_estimate,
    modulus_of_convexity_estimate,
    norm,
    normalize_l1_exact,
    normalize_linf_exact,
    oracle_left_symmetric,
    oracle_right_symmetric,
    ortho_cone,
    probe_space_symmetry,
    regular_polygon_cone,
    rho_cone_membership,
    run_acceptance,
    sphere_point_2d,
    supporting_functionals,
    verify_monotone,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
