"""Argument checks shared by the public functions and the estimators."""

from __future__ import annotations

import math
import numbers

import numpy as np

TWO_PI = 2.0 * math.pi


def check_degree(n, name: str = "n", minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral | np.integer):
        if not (isinstance(n, numbers.Real) and float(n).is_integer()):
            raise TypeError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")
    return n


def check_p(p, allow_inf: bool = True) -> float:
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"p must satisfy p >= 1, got {p}")
    if math.isinf(p) and not allow_inf:
        raise ValueError("p = inf is not allowed here")
    return p


def check_degrees(ns, name: str = "ns") -> list[int]:
    ns = [check_degree(n, name) for n in ns]
    if not ns:
        raise ValueError(f"{name} must be nonempty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError(f"{name} must be strictly increasing, got {ns}")
    return ns


def check_periodic_grid(t) -> tuple[int, float]:
    """Validate that ``t`` is a uniform grid covering one period.

    Returns ``(points, offset)`` such that ``t_j = -pi + offset + 2 pi j / points``
    after sorting.
    """
    t = np.asarray(t, dtype=float).ravel()
    n = t.size
    if n < 16 or n & (n - 1):
        raise ValueError(f"need a power-of-two number (>= 16) of sample times, got {n}")
    if not np.all(np.isfinite(t)):
        raise ValueError("sample times must be finite")
    reduced = np.sort(np.mod(t + math.pi, TWO_PI))
    step = TWO_PI / n
    if not np.allclose(np.diff(reduced), step, rtol=0.0, atol=1e-8):
        raise ValueError("sample times must form a uniform grid over one 2*pi period")
    return n, float(reduced[0])
