"""Nonlinear Fourier analysis in the Moebius phase ``theta_a``.

Core objects are re-exported here; the modules hold the rest.
"""

__version__ = "0.1.0"

from .phase import PhaseParam, as_phase, poisson_weight, riesz_bounds, theta, theta_inv
from .kernels import dirichlet, fejer, lebesgue_constant
from .numerics import GridSpec, Signal, lp_norm, modulus_smoothness, sup_norm, warp_signal
from .transform import (
    CoeffVector,
    NlPolynomial,
    a_convolution,
    analyze,
    cesaro_mean,
    derivative_coeffs,
    partial_sum,
    riemann_lebesgue_profile,
    synthesize,
)
from .signals import CORPUS, builtin
from .approx import (
    VerifyReport,
    best_approx_error,
    convergence_curve,
    pointwise_convergence_check,
    verify_corpus,
    verify_fejer_contraction,
    verify_jackson,
    verify_lebesgue_bound,
    verify_lebesgue_lp_bound,
    verify_modulus_sandwich,
    verify_near_best,
)
from .bernstein import BernsteinReport, bernstein_sweep, differentiate, verify_bernstein
from .estimators import NonlinearFourierFeatures, NonlinearFourierRegressor

__all__ = [
    "__version__",
    "PhaseParam", "as_phase", "theta", "theta_inv", "poisson_weight", "riesz_bounds",
    "dirichlet", "fejer", "lebesgue_constant",
    "GridSpec", "Signal", "lp_norm", "sup_norm", "modulus_smoothness", "warp_signal",
    "CoeffVector", "NlPolynomial", "analyze", "synthesize", "partial_sum", "cesaro_mean",
    "a_convolution", "derivative_coeffs", "riemann_lebesgue_profile",
    "CORPUS", "builtin",
    "VerifyReport", "best_approx_error", "convergence_curve", "pointwise_convergence_check",
    "verify_corpus", "verify_fejer_contraction", "verify_jackson", "verify_lebesgue_bound",
    "verify_lebesgue_lp_bound", "verify_modulus_sandwich", "verify_near_best",
    "BernsteinReport", "bernstein_sweep", "differentiate", "verify_bernstein",
    "NonlinearFourierFeatures", "NonlinearFourierRegressor",
]
