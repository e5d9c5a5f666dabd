"""Moebius phase function, its inverse and the Poisson weight.

For a point ``a = |a| e^{i t_a}`` of the open unit disk the phase
``theta_a`` is the continuous lift of ``arg((e^{it} - a) / (1 - conj(a) e^{it}))``
normalised so that ``theta_a(t) - t`` lies in ``(-pi, pi)``.  Writing
``z = conj(a) e^{it}`` the boundary value equals ``e^{it} conj(1 - z) / (1 - z)``
and ``Re(1 - z) > 0``, so the lift has the closed form::

    theta_a(t) = t + 2 * atan2(|a| sin(t - t_a), 1 - |a| cos(t - t_a))

which never needs unwrapping.  The inverse map is the phase of ``-a``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PhaseParam",
    "as_phase",
    "theta",
    "theta_inv",
    "theta_inv_bisect",
    "poisson_weight",
    "riesz_bounds",
]

MAX_MODULUS = 1.0 - 1e-6
WARN_MODULUS = 0.99


def _wrap_angle(angle: float) -> float:
    """Map an angle into (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


@dataclass(frozen=True)
class PhaseParam:
    """Complex Moebius parameter ``a`` stored in polar form.

    Parameters
    ----------
    modulus : float
        ``|a|``, must satisfy ``0 <= modulus <= 1 - 1e-6``.
    angle : float
        ``t_a`` in radians; wrapped into ``(-pi, pi]``.
    """

    modulus: float = 0.0
    angle: float = 0.0

    def __post_init__(self):
        modulus = float(self.modulus)
        angle = float(self.angle)
        if not (math.isfinite(modulus) and math.isfinite(angle)):
            raise ValueError("phase parameter must be finite")
        if modulus < 0.0:
            raise ValueError(f"modulus must be nonnegative, got {modulus}")
        if modulus >= 1.0:
            raise ValueError(f"|a| must be < 1, got {modulus}")
        if modulus > MAX_MODULUS:
            raise ValueError(
                f"|a|={modulus} exceeds the supported maximum {MAX_MODULUS}"
            )
        if modulus > WARN_MODULUS:
            warnings.warn(
                f"|a|={modulus} > {WARN_MODULUS}: the Poisson weight peaks at "
                f"~{2.0 / (1.0 - modulus):.3g}, quadrature grids must be refined",
                RuntimeWarning,
                stacklevel=3,
            )
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "angle", _wrap_angle(angle))

    @classmethod
    def from_complex(cls, a: complex) -> "PhaseParam":
        a = complex(a)
        return cls(abs(a), math.atan2(a.imag, a.real) if a != 0 else 0.0)

    @property
    def value(self) -> complex:
        return self.modulus * complex(math.cos(self.angle), math.sin(self.angle))

    @property
    def is_identity(self) -> bool:
        return self.modulus == 0.0

    @property
    def distortion(self) -> float:
        """``(1 + |a|) / (1 - |a|)``, the upper bound of the Poisson weight."""
        return (1.0 + self.modulus) / (1.0 - self.modulus)

    def inverse(self) -> "PhaseParam":
        """Parameter whose phase function inverts this one (``-a``)."""
        if self.is_identity:
            return self
        return PhaseParam(self.modulus, self.angle + math.pi)


def as_phase(a) -> PhaseParam:
    """Coerce ``PhaseParam``, complex, real or ``(modulus, angle)`` to a PhaseParam."""
    if isinstance(a, PhaseParam):
        return a
    if a is None:
        return PhaseParam()
    if isinstance(a, tuple) and len(a) == 2:
        return PhaseParam(*a)
    if isinstance(a, complex):
        return PhaseParam.from_complex(a)
    a = float(a)
    if a < 0:
        return PhaseParam(-a, math.pi)
    return PhaseParam(a, 0.0)


def theta(a: PhaseParam, t):
    """Nonlinear phase ``theta_a(t)``; vectorised over ``t``."""
    a = as_phase(a)
    t = np.asarray(t, dtype=float)
    if a.is_identity:
        return t.copy() if t.ndim else float(t)
    r = a.modulus
    d = t - a.angle
    out = t + 2.0 * np.arctan2(r * np.sin(d), 1.0 - r * np.cos(d))
    return out if out.ndim else float(out)


def theta_inv(a: PhaseParam, s):
    """Inverse phase: the unique ``t`` with ``theta_a(t) = s``.

    Uses the closed-form Moebius inverse ``(w + a) / (1 + conj(a) w)``, which is
    the boundary map of ``-a`` and therefore shares the same branch convention.
    """
    return theta(as_phase(a).inverse(), s)


def theta_inv_bisect(a: PhaseParam, s, iterations: int = 80):
    """Invert ``theta_a`` by bisection on the monotone lift.

    Slow but assumption free; kept as an oracle for :func:`theta_inv`.
    """
    a = as_phase(a)
    s = np.asarray(s, dtype=float)
    # |theta_a(t) - t| < pi brackets the root in [s - pi, s + pi]
    lo = s - math.pi
    hi = s + math.pi
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        below = np.asarray(theta(a, mid)) < s
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = 0.5 * (lo + hi)
    return out if out.ndim else float(out)


def poisson_weight(a: PhaseParam, t):
    """Poisson kernel ``p_a(t) = theta_a'(t)``."""
    a = as_phase(a)
    t = np.asarray(t, dtype=float)
    if a.is_identity:
        out = np.ones_like(t)
    else:
        r = a.modulus
        out = (1.0 - r * r) / (1.0 - 2.0 * r * np.cos(t - a.angle) + r * r)
    return out if out.ndim else float(out)


def riesz_bounds(a: PhaseParam) -> tuple[float, float]:
    """Riesz-basis bounds of ``{e^{ik theta_a}}`` in ``L^2(T)``."""
    a = as_phase(a)
    k = a.distortion
    return math.sqrt(1.0 / k), math.sqrt(k)
