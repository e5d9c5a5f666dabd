"""Builtin test signals.

Names follow the command-line syntax ``name[:key=value,...]``, e.g.
``cos-warped:k=3`` or ``holder:alpha=0.5``.  Signals at jump points take the
midpoint value.
"""

from __future__ import annotations

import math

import numpy as np

from .numerics import Signal
from .phase import PhaseParam, as_phase, poisson_weight, theta

__all__ = ["builtin", "parse_signal_spec", "CORPUS", "BUILTIN_NAMES", "corpus"]

TWO_PI = 2.0 * math.pi

BUILTIN_NAMES = (
    "square",
    "sawtooth",
    "pulse",
    "abs-sin",
    "triangle",
    "lipschitz",
    "half-sine",
    "holder",
    "cos-warped",
    "analytic-exp-cos",
    "poisson",
    "exp-sin2",
    "cos",
    "random-trig",
)

CORPUS = (
    "square",
    "sawtooth",
    "pulse",
    "abs-sin",
    "triangle",
    "half-sine",
    "holder:alpha=0.5",
    "holder:alpha=0.75",
    "cos-warped:k=1",
    "cos-warped:k=3",
    "analytic-exp-cos",
    "poisson",
    "exp-sin2",
    "cos",
    "random-trig:deg=5",
    "random-trig:deg=12",
)


def parse_signal_spec(spec: str) -> tuple[str, dict]:
    name, _, rest = spec.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"bad signal parameter {item!r} in {spec!r}")
            params[key.strip()] = float(value)
    return name.strip(), params


def _wrap(t):
    # representative in [-pi, pi)
    return np.mod(t + math.pi, TWO_PI) - math.pi


def _square(t):
    x = _wrap(t)
    return np.where(x == -math.pi, 0.0, np.sign(x))


def _sawtooth(t):
    x = _wrap(t) / math.pi
    return np.where(x == -1.0, 0.0, x)


def _random_trig(deg: int, seed: int):
    rng = np.random.default_rng([seed, deg])
    cos_c = rng.standard_normal(deg + 1) / math.sqrt(deg + 1)
    sin_c = rng.standard_normal(deg + 1) / math.sqrt(deg + 1)
    sin_c[0] = 0.0
    ks = np.arange(deg + 1)
    # f = Re sum_k (cos_c - i sin_c)_k e^{ikt}, evaluated by Horner in e^{it}
    c = cos_c - 1j * sin_c
    dc = 1j * ks * c

    def horner(coeffs, t):
        z = np.exp(1j * np.asarray(t, dtype=float))
        acc = np.full(z.shape, coeffs[-1], dtype=complex)
        for ck in coeffs[-2::-1]:
            acc = acc * z + ck
        return acc.real

    def f(t):
        return horner(c, t)

    def df(t):
        return horner(dc, t)

    return f, df, (cos_c, sin_c)


def builtin(spec: str, a=None, seed: int = 0) -> Signal:
    """Instantiate a builtin signal.

    ``a`` is only used by ``cos-warped`` (which is ``cos(k theta_a(t))``);
    ``seed`` only by ``random-trig``.
    """
    name, params = parse_signal_spec(spec)
    if name == "square":
        return Signal(_square, name=spec, kind="piecewise", jumps=(-math.pi, 0.0))
    if name == "sawtooth":
        return Signal(_sawtooth, name=spec, kind="piecewise", jumps=(-math.pi,))
    if name == "pulse":
        width = params.get("width", 1.0)
        f = lambda t: np.where(np.abs(_wrap(t)) < width, 1.0,
                               np.where(np.abs(_wrap(t)) == width, 0.5, 0.0))
        return Signal(f, name=spec, kind="piecewise", jumps=(-width, width))
    if name == "abs-sin":
        return Signal(lambda t: np.abs(np.sin(t)), name=spec, kind="lipschitz",
                      kinks=(-math.pi, 0.0), holder=(1.0, 1.0))
    if name in ("triangle", "lipschitz"):
        return Signal(lambda t: np.abs(_wrap(t)), name=spec, kind="lipschitz",
                      kinks=(-math.pi, 0.0), holder=(1.0, 1.0))
    if name == "half-sine":
        return Signal(lambda t: np.maximum(np.sin(t), 0.0), name=spec, kind="lipschitz",
                      kinks=(-math.pi, 0.0), holder=(1.0, 1.0))
    if name == "holder":
        alpha = params.get("alpha", 0.5)
        if not 0.0 < alpha <= 1.0:
            raise ValueError(f"holder exponent must lie in (0, 1], got {alpha}")
        # |x^alpha - y^alpha| <= |x - y|^alpha and |sin(t/2)| is 1/2-Lipschitz
        return Signal(lambda t: np.abs(np.sin(0.5 * np.asarray(t))) ** alpha, name=spec,
                      kind="holder", kinks=(0.0,), holder=(alpha, 0.5**alpha))
    if name == "cos-warped":
        k = int(params.get("k", 1))
        ph = as_phase(a) if a is not None else PhaseParam()
        return Signal(
            lambda t: np.cos(k * np.asarray(theta(ph, t))),
            name=spec,
            kind="analytic",
            derivative=lambda t: -k * np.sin(k * np.asarray(theta(ph, t))) * poisson_weight(ph, t),
            phase=None if ph.is_identity else ph,
            meta={"a": ph},
        )
    if name == "analytic-exp-cos":
        return Signal(lambda t: np.exp(np.cos(t)), name=spec, kind="analytic",
                      derivative=lambda t: -np.sin(t) * np.exp(np.cos(t)))
    if name == "poisson":
        r = params.get("r", 0.5)
        # 1 + 2 sum r^k cos(kt)
        f = lambda t: (1 - r * r) / (1 - 2 * r * np.cos(t) + r * r)
        df = lambda t: -2 * r * np.sin(t) * (1 - r * r) / (1 - 2 * r * np.cos(t) + r * r) ** 2
        return Signal(f, name=spec, kind="analytic", derivative=df)
    if name == "exp-sin2":
        return Signal(lambda t: np.exp(np.sin(2 * np.asarray(t))), name=spec, kind="analytic",
                      derivative=lambda t: 2 * np.cos(2 * np.asarray(t)) * np.exp(np.sin(2 * np.asarray(t))))
    if name == "cos":
        return Signal(np.cos, name=spec, kind="analytic", derivative=lambda t: -np.sin(t))
    if name == "random-trig":
        deg = int(params.get("deg", 5))
        f, df, coeffs = _random_trig(deg, int(params.get("seed", seed)))
        return Signal(f, name=spec, kind="analytic", derivative=df,
                      meta={"cos": coeffs[0], "sin": coeffs[1]})
    raise ValueError(f"unknown builtin signal {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def corpus(a=None, seed: int = 0, names=CORPUS) -> list[Signal]:
    return [builtin(name, a, seed) for name in names]
