"""scikit-learn style wrappers.

``X`` holds sample times in its single column.  The regressor needs the times
to form a uniform power-of-two grid over one period, because it fits by
trigonometric interpolation followed by nonlinear Fourier analysis.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from ._validation import check_degree, check_periodic_grid
from .numerics import GridSpec, Signal
from .phase import PhaseParam, theta
from .transform import NlPolynomial, analyze, cesaro_coeffs

__all__ = ["NonlinearFourierRegressor", "NonlinearFourierFeatures"]


def _times(X) -> np.ndarray:
    X = check_array(X, ensure_2d=True)
    if X.shape[1] != 1:
        raise ValueError(f"X must have exactly one column of sample times, got {X.shape[1]}")
    return X[:, 0]


class NonlinearFourierRegressor(RegressorMixin, BaseEstimator):
    """Fit ``S_n^a`` (or ``sigma_n^a``) of periodic samples.

    Parameters
    ----------
    n_degree : int
        Highest frequency kept.
    a_modulus, a_angle : float
        Polar form of the Moebius parameter.
    operator : {"partial_sum", "cesaro"}
        Which approximant ``predict`` evaluates.
    grid_points : int or None
        Quadrature grid for the analysis; ``None`` refines adaptively.

    Attributes
    ----------
    coef_ : ndarray of shape (2 n_degree + 1,)
        Nonlinear Fourier coefficients ``c_{-n..n}`` of the interpolated data.
    polynomial_ : NlPolynomial
        The fitted approximant.
    """

    def __init__(self, n_degree=16, a_modulus=0.0, a_angle=0.0, operator="partial_sum",
                 grid_points=None):
        self.n_degree = n_degree
        self.a_modulus = a_modulus
        self.a_angle = a_angle
        self.operator = operator
        self.grid_points = grid_points

    def fit(self, X, y):
        X, y = check_X_y(X, y, y_numeric=True)
        t = _times(X)
        n = check_degree(self.n_degree, "n_degree")
        if self.operator not in ("partial_sum", "cesaro"):
            raise ValueError(f"operator must be 'partial_sum' or 'cesaro', got {self.operator!r}")
        a = PhaseParam(self.a_modulus, self.a_angle)
        points, offset = check_periodic_grid(t)
        order = np.argsort(np.mod(t - (offset - np.pi), 2 * np.pi))
        signal = Signal.from_samples(np.asarray(y, dtype=float)[order], offset, "training data")
        grid = None if self.grid_points is None else GridSpec(int(self.grid_points))
        cv = analyze(signal, a, n, grid)
        if self.operator == "cesaro":
            cv = cesaro_coeffs(cv)
        self.phase_ = a
        self.coef_ = cv.coeffs.copy()
        self.polynomial_ = NlPolynomial(cv)
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "polynomial_")
        return np.real(self.polynomial_(_times(X)))


class NonlinearFourierFeatures(TransformerMixin, BaseEstimator):
    """Map times ``t`` to ``[1, cos(k theta_a(t)), sin(k theta_a(t))]_{k=1..n}``.

    A linear model on these features ranges over the real elements of
    ``tau_n^a``.
    """

    def __init__(self, n_degree=8, a_modulus=0.0, a_angle=0.0):
        self.n_degree = n_degree
        self.a_modulus = a_modulus
        self.a_angle = a_angle

    def fit(self, X, y=None):
        _times(X)
        check_degree(self.n_degree, "n_degree")
        self.phase_ = PhaseParam(self.a_modulus, self.a_angle)
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "phase_")
        th = np.asarray(theta(self.phase_, _times(X)))
        k = np.arange(1, self.n_degree + 1)
        kth = np.multiply.outer(th, k)
        return np.hstack([np.ones((th.size, 1)), np.cos(kth), np.sin(kth)])

    def get_feature_names_out(self, input_features=None):
        k = range(1, self.n_degree + 1)
        return np.array(["const", *(f"cos{j}" for j in k), *(f"sin{j}" for j in k)], dtype=object)
