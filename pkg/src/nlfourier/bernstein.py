"""Derivatives of nonlinear trigonometric polynomials and Bernstein-type bounds.

For ``t(x) = T(theta_a(x))`` with ``T(u) = sum c_k e^{iku}`` the substitution
``u = theta_a(x)`` gives, with ``q = p_a o theta_a^{-1}``::

    ||t||_p^p  = (1/2 pi) int |T(u)|^p / q(u) du
    ||t'||_p^p = (1/2 pi) int |T'(u)|^p q(u)^{p-1} du

so both norms are means over a uniform ``u`` grid, and ``T``, ``T'`` for a
whole batch of polynomials come from one inverse FFT each.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_degree, check_p
from .numerics import GridSpec, Signal
from .phase import PhaseParam, as_phase, poisson_weight, theta_inv
from .transform import NlPolynomial, _next_pow2

__all__ = [
    "BernsteinReport",
    "differentiate",
    "bound_constant",
    "statement_constant",
    "random_polynomials",
    "verify_bernstein",
    "bernstein_sweep",
    "write_sharpness_csv",
]

REL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class BernsteinReport:
    """``||t'||_p`` against ``2n ((1+|a|)/(1-|a|))^{2+1/p} ||t||_p``.

    ``ratio`` is ``||t'||_p / (n ||t||_p)``.  ``max_ratio`` is the largest
    ratio over the polynomials of a sweep cell (equal to ``ratio`` for a
    single check).
    """

    a: PhaseParam
    n: int
    p: float
    lhs: float
    t_norm: float
    rhs_constant: float
    ratio: float
    trials: int = 1
    max_ratio: float = field(default=float("nan"))
    statement_exponent_holds: bool = True

    def __post_init__(self):
        if math.isnan(self.max_ratio):
            object.__setattr__(self, "max_ratio", self.ratio)

    @property
    def rhs(self) -> float:
        return self.rhs_constant * self.t_norm

    @property
    def tolerance(self) -> float:
        return REL_TOL * self.rhs

    @property
    def passed(self) -> bool:
        # bound_constant / n is the largest admissible ratio
        return bool(self.max_ratio <= self.rhs_constant / self.n * (1.0 + REL_TOL))

    def to_dict(self) -> dict:
        return {
            "theorem_id": "bernstein",
            "lhs": self.lhs,
            "rhs": self.rhs,
            "constant_used": self.rhs_constant,
            "margin": self.rhs - self.lhs,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "context": {"a": [self.a.modulus, self.a.angle], "n": self.n, "p": self.p,
                        "signal": f"random-polynomial x{self.trials}", "grid": None},
            "details": {"ratio": self.ratio, "max_ratio": self.max_ratio,
                        "proof_exponent": 2.0 + 1.0 / self.p,
                        "statement_exponent": 2.0 + 2.0 / self.p,
                        "statement_exponent_holds": self.statement_exponent_holds},
        }


def bound_constant(n: int, a, p: float) -> float:
    """``2n ((1+|a|)/(1-|a|))^{2+1/p}``."""
    return 2.0 * n * as_phase(a).distortion ** (2.0 + 1.0 / p)


def statement_constant(n: int, a, p: float) -> float:
    """``2n ((1+|a|)/(1-|a|))^{2(1+1/p)}``: the same bound with the larger exponent."""
    return 2.0 * n * as_phase(a).distortion ** (2.0 + 2.0 / p)


def differentiate(poly: NlPolynomial) -> Signal:
    """Exact derivative ``p_a(x) sum ik c_k e^{ik theta_a(x)}`` as a signal."""
    return Signal(poly.derivative_values, name=f"d/dx[{poly.degree}]", kind="analytic",
                  phase=poly.a if not poly.a.is_identity else None,
                  is_complex=not poly.coeffs.real)


def _u_points(a: PhaseParam, n: int, grid=None) -> int:
    if grid is not None:
        return grid.points if isinstance(grid, GridSpec) else int(grid)
    # resolve |T|^p (degree n) and the Poisson weight, whose width is ~ 1 - |a|
    return max(1024, _next_pow2(32 * (n + 1)), _next_pow2(int(256.0 / (1.0 - a.modulus))))


def _batch_norms(a: PhaseParam, coeffs: np.ndarray, p: float, points: int):
    """``(||t||_p, ||t'||_p)`` for each row of ``coeffs`` (shape ``(m, 2n+1)``)."""
    m, width = coeffs.shape
    n = (width - 1) // 2
    if points <= 2 * n:
        raise ValueError(f"{points} points cannot resolve degree {n}")
    ks = np.arange(-n, n + 1)
    spec = np.zeros((m, points), dtype=complex)
    dspec = np.zeros((m, points), dtype=complex)
    idx = np.mod(ks, points)
    spec[:, idx] = coeffs
    dspec[:, idx] = coeffs * (1j * ks)
    # u_j = 2 pi j / points; T(u_j) = sum c_k e^{iku_j}
    T = np.fft.ifft(spec, axis=1) * points
    dT = np.fft.ifft(dspec, axis=1) * points
    u = 2.0 * math.pi * np.arange(points) / points
    q = poisson_weight(a, theta_inv(a, u))
    t_norm = np.mean(np.abs(T) ** p / q, axis=1) ** (1.0 / p)
    d_norm = np.mean(np.abs(dT) ** p * q ** (p - 1.0), axis=1) ** (1.0 / p)
    return t_norm, d_norm


def verify_bernstein(t: NlPolynomial, p_exp: float = 2.0, grid=None) -> BernsteinReport:
    """Check ``||t'||_p <= 2n ((1+|a|)/(1-|a|))^{2+1/p} ||t||_p`` for ``1 <= p < inf``."""
    p = check_p(p_exp, allow_inf=False)
    n = check_degree(t.degree, "degree", 1)
    a = t.a
    t_norm, d_norm = _batch_norms(a, t.coeffs.coeffs[None, :], p, _u_points(a, n, grid))
    lhs, tn = float(d_norm[0]), float(t_norm[0])
    ratio = lhs / (n * tn) if tn > 0 else 0.0
    return BernsteinReport(a, n, p, lhs, tn, bound_constant(n, a, p), ratio,
                           statement_exponent_holds=bool(lhs <= statement_constant(n, a, p) * tn))


def random_polynomials(n: int, trials: int, rng: np.random.Generator) -> np.ndarray:
    """``trials`` coefficient rows, i.i.d. complex Gaussian scaled by ``1/sqrt(2n+1)``."""
    shape = (trials, 2 * n + 1)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return z / math.sqrt(2.0 * (2 * n + 1))


def bernstein_sweep(degrees=(1, 2, 4, 8, 16, 32, 64), moduli=(0.0, 0.3, 0.7, 0.95),
                    p_exps=(1.0, 2.0, 4.0), trials: int = 200, seed: int = 0,
                    angle: float = 0.0) -> list[BernsteinReport]:
    """Worst ratio over ``trials`` random polynomials for every cell.

    Cell ``i`` (in the order degrees x moduli x p) draws from
    ``default_rng([seed, i])`` so any cell can be reproduced alone.
    """
    out = []
    cell = 0
    for n in degrees:
        n = check_degree(n, "degree", 1)
        for mod in moduli:
            a = PhaseParam(float(mod), angle)
            points = _u_points(a, n)
            for p in p_exps:
                p = check_p(p, allow_inf=False)
                rng = np.random.default_rng([seed, cell])
                cell += 1
                coeffs = random_polynomials(n, trials, rng)
                t_norm, d_norm = _batch_norms(a, coeffs, p, points)
                ratios = d_norm / (n * t_norm)
                worst = int(np.argmax(ratios))
                stmt = bool(np.all(d_norm <= statement_constant(n, a, p) * t_norm))
                out.append(BernsteinReport(a, n, p, float(d_norm[worst]), float(t_norm[worst]),
                                           bound_constant(n, a, p), float(ratios[worst]),
                                           trials, float(ratios[worst]), stmt))
    return out


def write_sharpness_csv(reports, path) -> None:
    """CSV ``n,|a|,p,max_ratio,bound_constant,pass``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "|a|", "p", "max_ratio", "bound_constant", "pass"])
        for r in reports:
            w.writerow([r.n, repr(r.a.modulus), repr(r.p), repr(r.max_ratio),
                        repr(r.rhs_constant), str(r.passed).lower()])

