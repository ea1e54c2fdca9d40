"""Exact divisor-class calculus for the correspondences that trace
curves of pencils induce between Hurwitz spaces of even-genus covers and
moduli spaces of curves.
"""

from .core import (
    AffineExpr,
    ExtSymbol,
    Rational,
    b_sym,
    binomial,
    c_sym,
    format_rational,
    parse_rational,
    substitute,
)
from .bases import (
    Basis,
    ClassMap,
    DivisorClass,
    E0,
    E2,
    E3,
    Ejc,
    LAMBDA,
    T2,
    T3j,
    compose,
    delta,
    hurwitz_basis,
    identity_map,
    m0b_sym_basis,
    mg_basis,
    mg_hat_basis,
    mg_prime_basis,
    zero_class,
)
from .m0b import (
    MarkedSet,
    canonical_class,
    count_boundary,
    delta_restricted,
    enumerate_boundary,
    forgetful_pullback,
    intersect_nonempty,
    kappa_class,
    normalize,
    psi_full,
    psi_restricted,
)
from .trace import (
    GenusData,
    GrrPieces,
    alpha_coeff,
    catalan_number,
    delta_s,
    delta_tau,
    e_coeff,
    genus_data,
    grr_pieces,
    omega_tau_sq,
    phi_pull_boundary,
    phi_pull_lambda,
    phihat_pull_boundary,
    phihat_pull_lambda,
    q_pullback,
    s_omega_sq,
)
from .pushforward import (
    PER_FACTORIAL_B,
    RAW,
    ExternalCoeffs,
    convert_normalization,
    eh_divisor,
    mg_canonical_class,
    p_phi_delta,
    p_phi_lambda,
    p_phihat_delta,
    p_phihat_lambda,
    p_push,
    p_q_kappa,
    p_q_map,
    prym_pullbacks,
)
from .slopes import (
    FAILS,
    HOLDS,
    UNKNOWN,
    SlopeReport,
    ample_cone_test,
    induced_slope_reduced,
    induced_slope_trace,
    kappa_slope_bound,
    slope_of,
)
from .checks import CHECKS, CheckResult, run_checks

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
