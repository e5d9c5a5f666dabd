"""Dirichlet and Fejer kernels and the Lebesgue constants.

Kernels are the raw trigonometric sums ``D_n(t) = 1/2 + sum_{k=1}^n cos(kt)``
and ``K_n = (D_0 + ... + D_n) / (n + 1)``; operators that use them apply
their own prefactor.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "dirichlet",
    "fejer",
    "dirichlet_prime",
    "lebesgue_constant",
    "LEBESGUE_ASYMPTOTIC_SLOPE",
]

LEBESGUE_ASYMPTOTIC_SLOPE = 4.0 / math.pi**2

_SINGULAR = 1e-8


def _check_order(n) -> int:
    if int(n) != n or n < 0:
        raise ValueError(f"kernel order must be a nonnegative integer, got {n}")
    return int(n)


def _direct_cos_sum(weights: np.ndarray, t: np.ndarray) -> np.ndarray:
    # 1/2 + sum_k weights[k-1] cos(k t)
    out = np.full(t.shape, 0.5)
    for k, w in enumerate(weights, start=1):
        out += w * np.cos(k * t)
    return out


def dirichlet(n: int, t):
    """Dirichlet kernel of order ``n``.

    Closed form ``sin((n + 1/2) t) / (2 sin(t/2))`` away from ``2 pi Z``,
    direct summation where ``|sin(t/2)| <= 1e-8``.
    """
    n = _check_order(n)
    t0 = np.asarray(t, dtype=float)
    t = np.atleast_1d(t0)
    half = np.sin(0.5 * t)
    near = np.abs(half) <= _SINGULAR
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.sin((n + 0.5) * t) / (2.0 * half)
    if np.any(near):
        out[near] = _direct_cos_sum(np.ones(n), t[near])
    return out if t0.ndim else float(out[0])


def fejer(n: int, t):
    """Fejer kernel of order ``n``: the mean of ``D_0, ..., D_n``."""
    n = _check_order(n)
    t0 = np.asarray(t, dtype=float)
    t = np.atleast_1d(t0)
    half = np.sin(0.5 * t)
    near = np.abs(half) <= _SINGULAR
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.sin(0.5 * (n + 1) * t) / half
        out = ratio * ratio / (2.0 * (n + 1))
    if np.any(near):
        weights = 1.0 - np.arange(1, n + 1) / (n + 1.0)
        out[near] = _direct_cos_sum(weights, t[near])
    return out if t0.ndim else float(out[0])


def dirichlet_prime(n: int, t):
    """Derivative ``D_n'(t) = -sum_{k=1}^n k sin(kt)`` by direct summation."""
    n = _check_order(n)
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape)
    for k in range(1, n + 1):
        out -= k * np.sin(k * t)
    return out if out.ndim else float(out)


def lebesgue_constant(n: int, quad_points: int | None = None) -> float:
    """Lebesgue constant ``(1/pi) * int_{-pi}^{pi} |D_n(t)| dt``.

    ``D_n`` is even and changes sign exactly at ``2 pi j / (2n + 1)``; the
    half-range integral is split there and each smooth piece is integrated
    with Gauss-Legendre.  ``quad_points`` counts nodes over the full period
    and must be at least ``64 (n + 1)``.
    """
    n = _check_order(n)
    if quad_points is None:
        quad_points = 64 * (n + 1)
    if quad_points < 64 * (n + 1):
        raise ValueError(
            f"quad_points={quad_points} undersamples D_{n}; need >= {64 * (n + 1)}"
        )
    if n == 0:
        return 1.0
    edges = np.concatenate(
        [[0.0], 2.0 * math.pi * np.arange(1, n + 1) / (2 * n + 1), [math.pi]]
    )
    order = max(8, int(math.ceil(quad_points / (2.0 * (n + 1)))))
    x, w = np.polynomial.legendre.leggauss(order)
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = 0.5 * (hi - lo) * x[None, :] + 0.5 * (hi + lo)
    weights = 0.5 * (hi - lo) * w[None, :]
    integral = np.sum(weights * np.abs(dirichlet(n, nodes)))
    return float(2.0 * integral / math.pi)
