"""Analysis and synthesis in the basis ``{e^{ik theta_a(t)}}``.

The coefficients ``c_k = (1/2 pi) int f(t) e^{-ik theta_a(t)} p_a(t) dt`` make
the basis orthonormal for the weight ``p_a``; substituting ``u = theta_a(t)``
they are the classical Fourier coefficients of ``F = f o theta_a^{-1}``.

Partial sums and Cesaro means are available through the coefficient route
and through three kernel representations:

* ``kernel_warped``: ``(1/pi) int f(t) K(theta_a(x) - theta_a(t)) p_a(t) dt``
* ``kernel_direct``: ``(1/pi) int F(theta_a(x) + s) K(s) ds``
* ``kernel_half``:   ``(1/pi) int_0^pi {F(theta_a(x) - s) + F(theta_a(x) + s)} K(s) ds``

with ``K`` the Dirichlet kernel ``D_n`` (partial sums) or the Fejer kernel
``K_n`` (Cesaro means).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_degree
from .kernels import dirichlet, fejer
from .numerics import (
    DEFAULT_POINTS,
    MAX_POINTS,
    GridSpec,
    Signal,
    as_signal,
    interval_rule,
    periodic_rule,
    warp_signal,
)
from .phase import PhaseParam, as_phase, poisson_weight, riesz_bounds, theta, theta_inv

__all__ = [
    "CoeffVector",
    "NlPolynomial",
    "DerivativeCoeffs",
    "DecayProfile",
    "required_points",
    "analyze",
    "synthesize",
    "partial_sum",
    "cesaro_mean",
    "a_convolution",
    "derivative_coeffs",
    "riemann_lebesgue_profile",
    "write_coeffs_csv",
    "read_coeffs_csv",
    "coeffs_to_json",
    "coeffs_from_json",
    "PARTIAL_SUM_METHODS",
    "CESARO_METHODS",
]

TWO_PI = 2.0 * math.pi
PARTIAL_SUM_METHODS = ("coeff", "kernel_warped", "kernel_direct", "kernel_half")
CESARO_METHODS = ("average", "kernel_warped", "kernel_direct", "kernel_half")
_BLOCK = 1 << 21  # max entries of a dense evaluation block


@dataclass(frozen=True, eq=False)
class CoeffVector:
    """Coefficients ``c_{-n}, ..., c_n`` tied to a phase parameter.

    ``real`` records that the source signal was real valued, in which case
    ``c_{-k} = conj(c_k)`` and synthesis returns real values.
    """

    a: PhaseParam
    coeffs: np.ndarray
    real: bool = False
    grid_points: int | None = None

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size % 2 == 0:
            raise ValueError("coefficient vector must have odd length 2n+1")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "a", as_phase(self.a))

    @property
    def degree(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def ks(self) -> np.ndarray:
        n = self.degree
        return np.arange(-n, n + 1)

    def __getitem__(self, k: int) -> complex:
        n = self.degree
        if abs(k) > n:
            return 0j
        return complex(self.coeffs[k + n])

    def __len__(self) -> int:
        return self.coeffs.size

    def truncate(self, m: int) -> "CoeffVector":
        n = self.degree
        m = min(check_degree(m, "m"), n)
        return CoeffVector(self.a, self.coeffs[n - m : n + m + 1], self.real, self.grid_points)

    def padded(self, m: int) -> "CoeffVector":
        n = self.degree
        if m <= n:
            return self.truncate(m)
        c = np.zeros(2 * m + 1, dtype=complex)
        c[m - n : m + n + 1] = self.coeffs
        return CoeffVector(self.a, c, self.real, self.grid_points)

    def scaled(self, weights) -> "CoeffVector":
        return CoeffVector(self.a, self.coeffs * np.asarray(weights), self.real, self.grid_points)

    def real_form(self) -> tuple[np.ndarray, np.ndarray]:
        """Cosine/sine coefficients ``a_k = c_k + c_{-k}``, ``b_k = i (c_k - c_{-k})``.

        With these, ``f ~ a_0/2 + sum_{k>=1} a_k cos(k theta_a) + b_k sin(k theta_a)``.
        """
        n = self.degree
        pos = self.coeffs[n:]
        neg = self.coeffs[n::-1]
        return pos + neg, 1j * (pos - neg)

    def l2(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True, eq=False)
class NlPolynomial:
    """Element of ``tau_n^a``: ``t -> sum_{|k|<=n} c_k e^{ik theta_a(t)}``."""

    coeffs: CoeffVector

    @classmethod
    def from_array(cls, a, coeffs, real: bool = False) -> "NlPolynomial":
        return cls(CoeffVector(as_phase(a), coeffs, real))

    @property
    def a(self) -> PhaseParam:
        return self.coeffs.a

    @property
    def degree(self) -> int:
        return self.coeffs.degree

    def __call__(self, t):
        return synthesize(self, t)

    def derivative_values(self, t):
        """``d/dt`` of the polynomial: ``p_a(t) sum ik c_k e^{ik theta_a(t)}``."""
        cv = self.coeffs
        inner = CoeffVector(cv.a, 1j * cv.ks * cv.coeffs, cv.real)
        return poisson_weight(cv.a, t) * synthesize(inner, t)

    def as_signal(self, name: str = "polynomial") -> Signal:
        return Signal(
            self.__call__,
            name=name,
            kind="analytic",
            derivative=self.derivative_values,
            phase=self.a,
            is_complex=not self.coeffs.real,
        )


@dataclass(frozen=True, eq=False)
class DerivativeCoeffs:
    """Coefficients of ``f'`` together with ``c_k(f') / (ik c_k(f))``."""

    coeffs: CoeffVector
    ratios: np.ndarray
    base: CoeffVector


@dataclass(frozen=True, eq=False)
class DecayProfile:
    ks: np.ndarray
    magnitudes: np.ndarray
    tail_max: float
    band_max: dict = field(default_factory=dict)
    decreasing: bool = True


def required_points(a, n: int) -> int:
    """Smallest grid that resolves degree ``n`` and the Poisson peak."""
    a = as_phase(a)
    return max(16, 8 * n, int(math.ceil(64.0 / (1.0 - a.modulus))))


def _next_pow2(n: int) -> int:
    return 1 << max(0, int(n) - 1).bit_length()


def _default_grid(a, n: int) -> GridSpec:
    return GridSpec(max(DEFAULT_POINTS, _next_pow2(2 * required_points(a, n))))


def _coerce_source(f):
    if isinstance(f, NlPolynomial):
        return f.as_signal()
    return as_signal(f)


def _coefficients_on_rule(f: Signal, a: PhaseParam, n: int, nodes, weights) -> np.ndarray:
    vals = f(nodes) * poisson_weight(a, nodes) * weights
    if not np.all(np.isfinite(vals)):
        bad = int(np.flatnonzero(~np.isfinite(vals))[0])
        raise FloatingPointError(f"integrand is not finite at node {bad} (t={nodes[bad]!r})")
    th = theta(a, nodes)
    ks = np.arange(-n, n + 1)
    out = np.zeros(ks.size, dtype=complex)
    step = max(1, _BLOCK // ks.size)
    for lo in range(0, nodes.size, step):
        out += np.exp(-1j * np.outer(ks, th[lo : lo + step])) @ vals[lo : lo + step]
    return out


def _coefficients_fft(f: Signal, a: PhaseParam, n: int, grid: GridSpec) -> np.ndarray:
    # c_k = (1/2pi) int F(u) e^{-iku} du with F = f o theta_a^{-1}
    N = grid.points
    if N <= 2 * n:
        raise ValueError(f"fft path needs more than {2 * n} points, got {N}")
    u = grid.nodes
    spectrum = np.fft.fft(f(theta_inv(a, u))) / N
    ks = np.arange(-n, n + 1)
    return spectrum[np.mod(ks, N)] * np.exp(-1j * ks * grid.start)


def analyze(f, a, n: int, grid=None, method: str = "quadrature", tol: float = 1e-9) -> CoeffVector:
    """Nonlinear Fourier coefficients ``c_{-n..n}`` of ``f``.

    Parameters
    ----------
    f : Signal, NlPolynomial or callable
    a : PhaseParam or complex
    n : int
        Highest frequency.
    grid : GridSpec or int, optional
        Quadrature grid; must have at least ``max(8n, 64/(1-|a|))`` points.
        When omitted the grid starts at 4096 points (or the required size)
        and doubles until two successive coefficient vectors agree to ``tol``.
    method : {"quadrature", "fft"}
        ``quadrature`` integrates every coefficient in ``t`` (composite
        Gauss-Legendre when ``f`` has breakpoints); ``fft`` samples ``F`` on a
        uniform ``u`` grid and applies one FFT, which is only accurate for
        smooth ``f``.
    """
    f = _coerce_source(f)
    a = as_phase(a)
    n = check_degree(n)
    if method not in ("quadrature", "fft"):
        raise ValueError(f"unknown method {method!r}")
    need = required_points(a, n)

    def compute(g: GridSpec) -> np.ndarray:
        if method == "fft":
            return _coefficients_fft(f, a, n, g)
        nodes, weights = periodic_rule(g, f.breakpoints)
        return _coefficients_on_rule(f, a, n, nodes, weights)

    if grid is not None:
        g = grid if isinstance(grid, GridSpec) else GridSpec(int(grid))
        if g.points < need:
            raise ValueError(
                f"grid of {g.points} points undersamples degree {n} at |a|={a.modulus}; "
                f"need at least {need}"
            )
        coeffs = compute(g)
    else:
        g = GridSpec(max(DEFAULT_POINTS, _next_pow2(need)))
        coeffs = compute(g)
        while True:
            if g.points >= MAX_POINTS:
                raise RuntimeError(f"coefficients did not settle to {tol} by {MAX_POINTS} points")
            finer = g.refined()
            refined = compute(finer)
            settled = np.max(np.abs(refined - coeffs), initial=0.0) <= tol
            g, coeffs = finer, refined
            if settled:
                break
    return CoeffVector(a, coeffs, real=not f.is_complex, grid_points=g.points)


def synthesize(p, t):
    """Evaluate ``sum c_k e^{ik theta_a(t)}`` by Horner's scheme in ``w = e^{i theta_a(t)}``."""
    cv = p.coeffs if isinstance(p, NlPolynomial) else p
    t = np.asarray(t, dtype=float)
    th = theta(cv.a, t)
    w = np.exp(1j * np.asarray(th))
    c = cv.coeffs
    acc = np.full(w.shape, c[-1], dtype=complex)
    for ck in c[-2::-1]:
        acc = acc * w + ck
    out = acc * np.exp(-1j * cv.degree * np.asarray(th))
    if cv.real:
        out = out.real
    return out if out.ndim else out[()]


# --- kernel representations -------------------------------------------------


def _eval_blocks(xs: np.ndarray, width: int, fn) -> np.ndarray:
    flat = xs.ravel()
    out = np.empty(flat.shape, dtype=complex)
    step = max(1, _BLOCK // max(width, 1))
    for lo in range(0, flat.size, step):
        out[lo : lo + step] = fn(flat[lo : lo + step])
    return out.reshape(xs.shape)


def _finish(values: np.ndarray, real: bool):
    if real:
        values = values.real
    return values if values.ndim else values[()]


def _kernel_warped(f: Signal, a, kernel, grid):
    nodes, weights = periodic_rule(grid, f.breakpoints)
    pre = 2.0 * f(nodes) * poisson_weight(a, nodes) * weights
    th_nodes = theta(a, nodes)

    def func(x):
        x = np.asarray(x, dtype=float)
        vals = _eval_blocks(
            x, nodes.size,
            lambda xb: kernel(np.subtract.outer(theta(a, xb), th_nodes)) @ pre,
        )
        return _finish(vals, not f.is_complex)

    return func


def _shift_breaks(F: Signal, u: float) -> list[float]:
    return [b - u for b in F.breakpoints]


def _kernel_direct(f: Signal, a, kernel, grid):
    F = warp_signal(f, a)
    if not F.breakpoints:
        nodes, weights = periodic_rule(grid)
        kw = 2.0 * kernel(nodes) * weights

        def func(x):
            x = np.asarray(x, dtype=float)
            vals = _eval_blocks(
                x, nodes.size, lambda xb: F(np.add.outer(theta(a, xb), nodes)) @ kw
            )
            return _finish(vals, not f.is_complex)

        return func

    def func(x):
        x = np.asarray(x, dtype=float)
        out = np.empty(x.size, dtype=complex)
        for i, xi in enumerate(x.ravel()):
            u = float(theta(a, xi))
            nodes, weights = periodic_rule(grid, _shift_breaks(F, u))
            out[i] = 2.0 * np.dot(weights * kernel(nodes), F(u + nodes))
        return _finish(out.reshape(x.shape), not f.is_complex)

    return func


def _half_range_rule(points: int, breakpoints=()):
    if not breakpoints:
        # trapezoid on [0, pi] with halved endpoints is the periodic rule for
        # the even integrand, hence spectrally accurate
        m = max(8, points // 2)
        nodes = math.pi * np.arange(m + 1) / m
        weights = np.full(m + 1, math.pi / m)
        weights[[0, -1]] *= 0.5
        return nodes, weights
    return interval_rule(0.0, math.pi, max(8, points // 2), breakpoints)


def _folded_breaks(F: Signal, u: float) -> list[float]:
    out = []
    for b in F.breakpoints:
        d = math.remainder(b - u, TWO_PI)
        out.append(abs(d))
    return out


def _kernel_half(f: Signal, a, kernel, grid):
    F = warp_signal(f, a)
    if not F.breakpoints:
        nodes, weights = _half_range_rule(grid.points)
        kw = kernel(nodes) * weights / math.pi

        def func(x):
            x = np.asarray(x, dtype=float)

            def block(xb):
                u = theta(a, xb)
                return (F(np.subtract.outer(u, nodes)) + F(np.add.outer(u, nodes))) @ kw

            return _finish(_eval_blocks(x, 2 * nodes.size, block), not f.is_complex)

        return func

    def func(x):
        x = np.asarray(x, dtype=float)
        out = np.empty(x.size, dtype=complex)
        for i, xi in enumerate(x.ravel()):
            u = float(theta(a, xi))
            nodes, weights = _half_range_rule(grid.points, _folded_breaks(F, u))
            out[i] = np.dot(weights * kernel(nodes), F(u - nodes) + F(u + nodes)) / math.pi
        return _finish(out.reshape(x.shape), not f.is_complex)

    return func


_KERNEL_METHODS = {
    "kernel_warped": _kernel_warped,
    "kernel_direct": _kernel_direct,
    "kernel_half": _kernel_half,
}


def _kernel_signal(f: Signal, a, n, kernel, method, grid, label) -> Signal:
    g = _default_grid(a, n) if grid is None else (
        grid if isinstance(grid, GridSpec) else GridSpec(int(grid)))
    func = _KERNEL_METHODS[method](f, a, kernel, g)
    return Signal(func, name=f"{label}[{f.name}]", kind="analytic", phase=a,
                  is_complex=f.is_complex, meta={"method": method, "grid": g.points})


def partial_sum(f, a, n: int, method: str = "coeff", grid=None) -> Signal:
    """Partial sum ``S_n^a(f)`` as an evaluable signal.

    ``method`` selects the representation: ``coeff`` (synthesis of
    :func:`analyze`), ``kernel_warped``, ``kernel_direct`` or ``kernel_half``
    (see the module docstring).
    """
    f = _coerce_source(f)
    a = as_phase(a)
    n = check_degree(n)
    if method == "coeff":
        poly = NlPolynomial(analyze(f, a, n, grid))
        sig = poly.as_signal(f"S_{n}[{f.name}]")
        sig.meta.update(coeffs=poly.coeffs)
        return sig
    if method not in _KERNEL_METHODS:
        raise ValueError(f"unknown partial-sum method {method!r}; choose from {PARTIAL_SUM_METHODS}")
    return _kernel_signal(f, a, n, lambda s: dirichlet(n, s), method, grid, f"S_{n}")


def cesaro_weights(n: int) -> np.ndarray:
    """Triangular multipliers ``1 - |k|/(n+1)`` for ``k = -n..n``."""
    ks = np.arange(-n, n + 1)
    return 1.0 - np.abs(ks) / (n + 1.0)


def cesaro_coeffs(cv: CoeffVector, n: int | None = None) -> CoeffVector:
    """Coefficients of ``sigma_n``: the average of the partial-sum vectors ``S_0..S_n``."""
    n = cv.degree if n is None else n
    base = cv.padded(n)
    acc = np.zeros(2 * n + 1, dtype=complex)
    for m in range(n + 1):
        acc[n - m : n + m + 1] += base.coeffs[n - m : n + m + 1]
    return CoeffVector(cv.a, acc / (n + 1), cv.real, cv.grid_points)


def cesaro_mean(f, a, n: int, method: str = "average", grid=None) -> Signal:
    """Cesaro (Fejer) mean ``sigma_n^a(f) = (S_0 + ... + S_n) / (n + 1)``."""
    f = _coerce_source(f)
    a = as_phase(a)
    n = check_degree(n)
    if method == "average":
        cv = cesaro_coeffs(analyze(f, a, n, grid))
        sig = NlPolynomial(cv).as_signal(f"sigma_{n}[{f.name}]")
        sig.meta.update(coeffs=cv)
        return sig
    if method not in _KERNEL_METHODS:
        raise ValueError(f"unknown Cesaro method {method!r}; choose from {CESARO_METHODS}")
    return _kernel_signal(f, a, n, lambda s: fejer(n, s), method, grid, f"sigma_{n}")


def a_convolution(f, g, a, grid=None) -> Signal:
    """Warped convolution ``((F * G) o theta_a)(x)``, ``F = f o theta_a^{-1}``.

    ``(F * G)(u) = (1/2 pi) int F(u - v) G(v) dv``; its coefficients in the
    basis ``e^{ik theta_a}`` are exactly ``c_k(f) c_k(g)``.
    """
    f = _coerce_source(f)
    g = _coerce_source(g)
    a = as_phase(a)
    grid = GridSpec() if grid is None else (grid if isinstance(grid, GridSpec) else GridSpec(int(grid)))
    F = warp_signal(f, a)
    G = warp_signal(g, a)
    real = not (f.is_complex or g.is_complex)
    if not F.breakpoints:
        nodes, weights = periodic_rule(grid, G.breakpoints)
        gw = G(nodes) * weights

        def func(x):
            x = np.asarray(x, dtype=float)
            vals = _eval_blocks(x, nodes.size,
                                lambda xb: F(np.subtract.outer(theta(a, xb), nodes)) @ gw)
            return _finish(vals, real)
    else:
        def func(x):
            x = np.asarray(x, dtype=float)
            out = np.empty(x.size, dtype=complex)
            for i, xi in enumerate(x.ravel()):
                u = float(theta(a, xi))
                nodes, weights = periodic_rule(
                    grid, [*G.breakpoints, *(u - b for b in F.breakpoints)])
                out[i] = np.dot(weights * G(nodes), F(u - nodes))
            return _finish(out.reshape(x.shape), real)

    return Signal(func, name=f"conv[{f.name},{g.name}]", kind="unknown", phase=a,
                  is_complex=not real)


def derivative_coeffs(f, a, n: int, grid=None) -> DerivativeCoeffs:
    """Coefficients of ``f'`` and the per-``k`` ratios ``c_k(f') / (ik c_k(f))``.

    Ratios are ``nan`` where ``ik c_k(f)`` is negligible.
    """
    a = as_phase(a)
    if isinstance(f, NlPolynomial):
        source = f.as_signal()
        deriv = Signal(f.derivative_values, name="d/dt polynomial", kind="analytic",
                       is_complex=not f.coeffs.real)
    else:
        source = as_signal(f)
        if source.derivative is None or source.kind == "piecewise":
            raise ValueError(f"signal {source.name!r} is not tagged differentiable")
        deriv = source.derivative_signal()
    dc = analyze(deriv, a, n, grid)
    base = analyze(source, a, n, grid)
    denom = 1j * base.ks * base.coeffs
    scale = max(np.max(np.abs(denom), initial=0.0), 1e-300)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(np.abs(denom) > 1e-10 * scale, dc.coeffs / denom, np.nan)
    return DerivativeCoeffs(dc, ratios, base)


def riemann_lebesgue_profile(f, a, n_max: int, grid=None) -> DecayProfile:
    """``|c_k|`` for ``|k| <= n_max`` with dyadic band maxima.

    ``tail_max`` is ``max_{|k| > n_max/2} |c_k|``; ``decreasing`` reports
    whether the band maxima are nonincreasing (up to 1e-12).
    """
    n_max = check_degree(n_max, "n_max", 1)
    cv = analyze(f, a, n_max, grid)
    mags = np.abs(cv.coeffs)
    ks = cv.ks
    absk = np.abs(ks)
    tail = float(mags[absk > n_max / 2].max(initial=0.0))
    bands = {}
    lo = 1
    while lo <= n_max:
        hi = min(2 * lo - 1, n_max)
        sel = (absk >= lo) & (absk <= hi)
        bands[(lo, hi)] = float(mags[sel].max())
        lo *= 2
    values = list(bands.values())
    decreasing = all(b <= a_ + 1e-12 for a_, b in zip(values, values[1:]))
    return DecayProfile(ks, mags, tail, bands, decreasing)


# --- coefficient files -------------------------------------------------------


def _meta(cv: CoeffVector, extra: dict | None) -> dict:
    meta = {
        "a_modulus": cv.a.modulus,
        "a_angle": cv.a.angle,
        "n": cv.degree,
        "grid_points": cv.grid_points,
        "real": cv.real,
    }
    if extra:
        meta.update(extra)
    return meta


def write_coeffs_csv(cv: CoeffVector, path, meta: dict | None = None) -> None:
    """``k,re,im`` rows preceded by ``# key=value`` metadata lines.

    ``path`` may also be an open text stream.
    """
    if hasattr(path, "write"):
        _write_coeffs(cv, path, meta)
        return
    with open(path, "w", newline="") as fh:
        _write_coeffs(cv, fh, meta)


def _write_coeffs(cv: CoeffVector, fh, meta: dict | None) -> None:
    for key, value in _meta(cv, meta).items():
        fh.write(f"# {key}={json.dumps(value)}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["k", "re", "im"])
    for k, c in zip(cv.ks, cv.coeffs):
        w.writerow([int(k), repr(float(c.real)), repr(float(c.imag))])


def read_coeffs_csv(path) -> tuple[CoeffVector, dict]:
    meta: dict = {}
    rows = []
    with open(path, newline="") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = json.loads(value)
                continue
            if line.startswith("k,"):
                continue
            k, re_, im = line.split(",")
            rows.append((int(k), float(re_), float(im)))
    rows.sort()
    ks = [r[0] for r in rows]
    n = ks[-1]
    if ks != list(range(-n, n + 1)):
        raise ValueError(f"{path}: coefficient indices must run from -n to n")
    a = PhaseParam(meta.get("a_modulus", 0.0), meta.get("a_angle", 0.0))
    coeffs = np.array([complex(r[1], r[2]) for r in rows])
    cv = CoeffVector(a, coeffs, bool(meta.get("real", False)), meta.get("grid_points"))
    return cv, meta


def coeffs_to_json(cv: CoeffVector, meta: dict | None = None) -> dict:
    return {
        "meta": _meta(cv, meta),
        "coefficients": [
            {"k": int(k), "re": float(c.real), "im": float(c.imag)}
            for k, c in zip(cv.ks, cv.coeffs)
        ],
    }


def coeffs_from_json(doc: dict) -> CoeffVector:
    meta = doc["meta"]
    rows = sorted(doc["coefficients"], key=lambda r: r["k"])
    a = PhaseParam(meta.get("a_modulus", 0.0), meta.get("a_angle", 0.0))
    return CoeffVector(a, [complex(r["re"], r["im"]) for r in rows],
                       bool(meta.get("real", False)), meta.get("grid_points"))


def frame_ratio(cv: CoeffVector, grid=None) -> tuple[float, float, float]:
    """``(lower, ||synthesize(c)||_2 / ||c||_2, upper)`` for the Riesz check."""
    from .numerics import lp_norm

    poly = NlPolynomial(cv)
    g = grid or GridSpec(max(DEFAULT_POINTS, _next_pow2(4 * cv.degree + 64)))
    norm = lp_norm(poly.as_signal(), 2, g)
    lo, hi = riesz_bounds(cv.a)
    return lo, norm / cv.l2(), hi
