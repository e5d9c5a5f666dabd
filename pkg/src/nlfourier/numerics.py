"""Periodic quadrature, signals, norms and the modulus of smoothness.

All integrals are taken against the normalised measure ``dt / 2 pi`` on one
period, so quadrature weights always sum to one.  Smooth periodic integrands
use the trapezoid rule, which is spectrally accurate; integrands with known
breakpoints (jumps or kinks) use composite Gauss-Legendre panels whose edges
sit on the breakpoints.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from .phase import PhaseParam, as_phase, poisson_weight, theta, theta_inv

__all__ = [
    "GridSpec",
    "Signal",
    "as_signal",
    "periodic_rule",
    "interval_rule",
    "warped_rule",
    "quad_periodic",
    "adaptive_quad",
    "lp_norm",
    "sup_norm",
    "modulus_smoothness",
    "warp_signal",
    "unwarp_signal",
    "read_csv_signal",
    "DEFAULT_POINTS",
    "MAX_POINTS",
]

TWO_PI = 2.0 * math.pi
DEFAULT_POINTS = 4096
MAX_POINTS = 2**20
GL_ORDER = 16
_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid ``t_j = -pi + offset + 2 pi j / points``."""

    points: int = DEFAULT_POINTS
    offset: float = 0.0

    def __post_init__(self):
        if int(self.points) != self.points or self.points < 16:
            raise ValueError(f"grid needs at least 16 points, got {self.points}")
        object.__setattr__(self, "points", int(self.points))

    @property
    def start(self) -> float:
        return -math.pi + self.offset

    @property
    def nodes(self) -> np.ndarray:
        return self.start + TWO_PI * np.arange(self.points) / self.points

    def refined(self, factor: int = 2) -> "GridSpec":
        return GridSpec(self.points * factor, self.offset)


def _as_grid(grid) -> GridSpec:
    if grid is None:
        return GridSpec()
    if isinstance(grid, GridSpec):
        return grid
    return GridSpec(int(grid))


@dataclass(frozen=True)
class Signal:
    """A 2 pi-periodic function ``t -> value``.

    Parameters
    ----------
    func : callable
        Vectorised evaluation rule.
    name : str
        Identifier used in reports.
    kind : str
        Smoothness tag: ``analytic``, ``lipschitz``, ``holder``,
        ``piecewise`` or ``unknown``.
    jumps, kinks : tuple of float
        Points of discontinuity of the function / of its derivative.
    derivative : callable, optional
        Exact derivative, when known.
    holder : (alpha, M), optional
        Hoelder exponent and constant, ``|f(x) - f(y)| <= M |x - y|^alpha``.
    phase : PhaseParam, optional
        Hint that ``f o theta_phase^{-1}`` is the tame representation; used
        to place quadrature nodes in the warped coordinate.
    is_complex : bool
        Whether values are complex.
    """

    func: Callable[[np.ndarray], np.ndarray]
    name: str = "signal"
    kind: str = "unknown"
    jumps: tuple[float, ...] = ()
    kinks: tuple[float, ...] = ()
    derivative: Callable[[np.ndarray], np.ndarray] | None = None
    holder: tuple[float, float] | None = None
    phase: PhaseParam | None = None
    is_complex: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.asarray(self.func(t))
        if out.shape != t.shape:
            out = np.broadcast_to(out, t.shape).copy()
        if not self.is_complex:
            out = out.real if np.iscomplexobj(out) else out.astype(float, copy=False)
        return out if out.ndim else out[()]

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return tuple(sorted(set(self.jumps) | set(self.kinks)))

    @property
    def continuous(self) -> bool:
        return not self.jumps and self.kind != "piecewise"

    @property
    def differentiable(self) -> bool:
        return self.derivative is not None

    def derivative_signal(self) -> "Signal":
        if self.derivative is None:
            raise ValueError(f"signal {self.name!r} has no evaluable derivative")
        return Signal(
            self.derivative,
            name=f"d/dt {self.name}",
            kind="unknown",
            jumps=tuple(self.kinks),
            phase=self.phase,
            is_complex=self.is_complex,
        )

    def with_name(self, name: str) -> "Signal":
        return replace(self, name=name)

    @classmethod
    def from_samples(cls, values, offset: float = 0.0, name: str = "samples") -> "Signal":
        """Trigonometric interpolant of samples on ``GridSpec(len(values), offset)``.

        The sample count must be a power of two (and at least 16); the Nyquist
        term is split evenly between ``+-N/2`` so real data interpolates to a
        real function.
        """
        values = np.asarray(values)
        n = values.size
        if values.ndim != 1 or n < 16 or n & (n - 1):
            raise ValueError(f"sample count must be a power of two >= 16, got {n}")
        is_complex = np.iscomplexobj(values)
        if not np.all(np.isfinite(values)):
            raise ValueError("samples contain non-finite values")
        start = -math.pi + offset
        coeffs = np.fft.fft(values) / n
        half = n // 2
        ks = np.concatenate([np.arange(-half, half), [half]]).astype(float)
        c = np.concatenate([coeffs[half:], coeffs[:half], [0.0]]).astype(complex)
        c[0] *= 0.5
        c[-1] = c[0]

        def evaluate(t, weights=c):
            t = np.asarray(t, dtype=float)
            flat = t.ravel() - start
            out = np.empty(flat.shape, dtype=complex)
            for lo in range(0, flat.size, 512):
                block = flat[lo : lo + 512]
                out[lo : lo + 512] = np.exp(1j * np.outer(block, ks)) @ weights
            return out.reshape(t.shape)

        dc = 1j * ks * c
        return cls(
            evaluate,
            name=name,
            kind="analytic",
            derivative=lambda t: evaluate(t, dc) if is_complex else evaluate(t, dc).real,
            is_complex=is_complex,
            meta={"samples": n, "offset": offset},
        )


def as_signal(f, name: str | None = None) -> Signal:
    if isinstance(f, Signal):
        return f
    if not callable(f):
        raise TypeError(f"expected a Signal or callable, got {type(f).__name__}")
    probe = np.asarray(f(np.array([0.1, 1.7])))
    return Signal(f, name=name or getattr(f, "__name__", "signal"),
                  is_complex=np.iscomplexobj(probe))


def _unique_mod(points, start: float) -> np.ndarray:
    if len(points) == 0:
        return np.empty(0)
    reduced = np.sort(np.mod(np.asarray(points, dtype=float) - start, TWO_PI))
    keep = np.concatenate([[True], np.diff(reduced) > 1e-13])
    reduced = reduced[keep]
    if reduced.size > 1 and TWO_PI - reduced[-1] + reduced[0] <= 1e-13:
        reduced = reduced[:-1]
    return reduced + start


GRADING_LEVELS = 14
GRADING_RATIO = 0.15


def _graded_cuts(lo: float, hi: float, count: int) -> np.ndarray:
    # uniform panels, with the two end panels split geometrically towards the
    # breakpoints so algebraic endpoint singularities (cusps) converge fast
    cuts = np.linspace(lo, hi, count + 1)
    h = cuts[1] - cuts[0]
    ladder = h * GRADING_RATIO ** np.arange(GRADING_LEVELS, 0, -1)
    inner = cuts[1:-1] if count > 1 else np.empty(0)
    left = lo + ladder
    right = hi - ladder[::-1]
    if count == 1:
        mid = 0.5 * (lo + hi)
        left, right = left[left < mid], right[right > mid]
    return np.concatenate([[lo], left, inner, right, [hi]])


def _panels(edges: np.ndarray, density: float, order: int):
    """Composite Gauss-Legendre nodes/weights on consecutive ``edges``.

    ``density`` is the target number of nodes per unit length.
    """
    x, w = _gauss_legendre(order)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        length = hi - lo
        if length <= 0:
            continue
        count = max(1, int(math.ceil(length * density / order)))
        cuts = _graded_cuts(lo, hi, count)
        a, b = cuts[:-1, None], cuts[1:, None]
        nodes.append((0.5 * (b - a) * x + 0.5 * (b + a)).ravel())
        weights.append((0.5 * (b - a) * w).ravel())
    return np.concatenate(nodes), np.concatenate(weights)


def periodic_rule(grid=None, breakpoints=(), order: int = GL_ORDER):
    """Nodes and weights for ``(1/2 pi) int_T g``.

    Without breakpoints this is the trapezoid rule on ``grid``; with
    breakpoints it is a composite Gauss-Legendre rule with about
    ``grid.points`` nodes whose panel edges include every breakpoint.
    """
    grid = _as_grid(grid)
    cuts = _unique_mod(breakpoints, grid.start)
    if cuts.size == 0:
        n = grid.points
        return grid.nodes, np.full(n, 1.0 / n)
    edges = np.concatenate([cuts, [cuts[0] + TWO_PI]])
    nodes, weights = _panels(edges, grid.points / TWO_PI, order)
    return nodes, weights / TWO_PI


def interval_rule(lo: float, hi: float, points: int, breakpoints=(), order: int = GL_ORDER):
    """Composite Gauss-Legendre rule for ``int_lo^hi g`` (unnormalised)."""
    inner = [b for b in breakpoints if lo < b < hi]
    edges = np.array(sorted({lo, hi, *inner}))
    return _panels(edges, points / (hi - lo), order)


def warped_rule(grid, a: PhaseParam, breakpoints=(), order: int = GL_ORDER):
    """Rule for ``(1/2 pi) int_T g(t) dt`` built on the coordinate ``u = theta_a(t)``.

    Nodes are ``theta_a^{-1}(u_j)`` for a uniform (or breakpoint-aware) rule
    in ``u``; weights carry the Jacobian ``1 / p_a``.  This resolves functions
    of the form ``P(theta_a(t))`` at the cost of ``P`` alone.
    """
    a = as_phase(a)
    if a.is_identity:
        return periodic_rule(grid, breakpoints, order)
    u_breaks = [float(theta(a, b)) for b in breakpoints]
    u, wu = periodic_rule(grid, u_breaks, order)
    t = theta_inv(a, u)
    return t, wu / poisson_weight(a, t)


def _rule_for(f: Signal, grid, phase=None):
    hint = phase if phase is not None else f.phase
    if hint is not None and not as_phase(hint).is_identity:
        return warped_rule(grid, hint, f.breakpoints)
    return periodic_rule(grid, f.breakpoints)


def _checked(values: np.ndarray, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(values)
    finite = np.isfinite(values)
    if not np.all(finite):
        bad = np.flatnonzero(~finite.reshape(finite.shape[0], -1).all(axis=1))[0]
        raise FloatingPointError(
            f"integrand is not finite at node {bad} (t={nodes[bad]!r})"
        )
    return values


def quad_periodic(f, grid=None, breakpoints=()):
    """``(1/2 pi) int_{-pi}^{pi} f(t) dt`` by the periodic trapezoid rule.

    ``f`` maps an array of nodes to values (extra trailing axes allowed).
    Known breakpoints switch to the composite Gauss-Legendre rule.
    """
    nodes, weights = periodic_rule(grid, breakpoints)
    values = _checked(f(nodes), nodes)
    return np.tensordot(weights, values, axes=(0, 0))[()]


def adaptive_quad(f, start: int = DEFAULT_POINTS, tol: float = 1e-9,
                  cap: int = MAX_POINTS, breakpoints=()):
    """Double the grid until two successive estimates agree to ``tol``.

    Returns ``(value, points)``.  Raises ``RuntimeError`` when ``cap`` is hit
    without agreement.
    """
    points = start
    previous = quad_periodic(f, GridSpec(points), breakpoints)
    while points < cap:
        points *= 2
        current = quad_periodic(f, GridSpec(points), breakpoints)
        if np.max(np.abs(np.asarray(current) - previous)) <= tol:
            return current, points
        previous = current
    raise RuntimeError(f"quadrature did not settle to {tol} within {cap} points")


def _check_p(p) -> float:
    p = float(p)
    if not (p >= 1.0):
        raise ValueError(f"p must satisfy 1 <= p <= inf, got {p}")
    return p


def lp_norm(f, p, grid=None, phase=None) -> float:
    """Normalised ``L^p`` norm ``((1/2 pi) int |f|^p)^{1/p}``; ``p=inf`` is the sup."""
    p = _check_p(p)
    f = as_signal(f)
    if math.isinf(p):
        return sup_norm(f, grid, phase)[0]
    nodes, weights = _rule_for(f, grid, phase)
    values = np.abs(_checked(f(nodes), nodes))
    peak = values.max(initial=0.0)
    if peak == 0.0:
        return 0.0
    scaled = values / peak
    return float(peak * np.dot(weights, scaled**p) ** (1.0 / p))


def _candidate_nodes(f: Signal, grid, phase=None) -> np.ndarray:
    grid = _as_grid(grid)
    nodes = [periodic_rule(grid, f.breakpoints)[0]]
    hint = phase if phase is not None else f.phase
    if hint is not None and not as_phase(hint).is_identity:
        nodes.append(warped_rule(grid, hint, f.breakpoints)[0])
    nodes = np.concatenate(nodes)
    return np.unique(np.mod(nodes + math.pi, TWO_PI) - math.pi)


def _polish_max(g, nodes: np.ndarray, values: np.ndarray, candidates: int = 3) -> float:
    """Refine the largest local maxima of ``g`` sampled on sorted periodic ``nodes``."""
    best = float(values.max())
    n = nodes.size
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    peaks = np.flatnonzero((values >= left) & (values >= right))
    if peaks.size == 0:
        return best
    peaks = peaks[np.argsort(values[peaks])[::-1][:candidates]]
    for i in peaks:
        lo = nodes[i - 1] if i > 0 else nodes[-1] - TWO_PI
        hi = nodes[i + 1] if i < n - 1 else nodes[0] + TWO_PI
        if not lo < nodes[i] < hi:
            continue
        res = minimize_scalar(lambda x: -float(g(np.array([x]))[0]), bounds=(lo, hi),
                              method="bounded", options={"xatol": 1e-13})
        if res.success:
            best = max(best, -float(res.fun))
    return best


def sup_norm(f, grid=None, phase=None, polish: bool = True) -> tuple[float, float]:
    """Sup norm estimate ``(value, tolerance)``.

    The maximum of ``|f|`` over the grid (plus warped nodes when a phase hint
    is present) is refined by a bounded Brent/golden-section search around
    the best local maxima; ``tolerance`` is the size of that refinement,
    an indication of how far the grid maximum was from the polished value.
    """
    f = as_signal(f)
    nodes = _candidate_nodes(f, grid, phase)
    values = np.abs(_checked(f(nodes), nodes))
    grid_max = float(values.max())
    if not polish:
        return grid_max, 0.0
    value = _polish_max(lambda x: np.abs(f(x)), nodes, values)
    return value, value - grid_max


def modulus_smoothness(f, t: float, p=math.inf, grid=None, shifts: int = 256) -> float:
    """Estimate ``omega(f, t)_p = sup_{0 < h <= t} ||f(. + h) - f||_p``.

    The supremum over ``h`` is taken over ``shifts`` equally spaced shifts,
    so the result is a lower bound of the true modulus.
    """
    p = _check_p(p)
    if not (0.0 < t <= TWO_PI + 1e-12):
        raise ValueError(f"t must lie in (0, 2 pi], got {t}")
    f = as_signal(f)
    hs = t * np.arange(1, shifts + 1) / shifts
    if math.isinf(p):
        x = _candidate_nodes(f, grid)
        fx = f(x)
        best, best_h = -1.0, hs[-1]
        for h in hs:
            m = float(np.max(np.abs(f(x + h) - fx)))
            if m > best:
                best, best_h = m, h
        diff = np.abs(f(x + best_h) - fx)
        return _polish_max(lambda y: np.abs(f(y + best_h) - f(y)), x, diff)
    best = 0.0
    bp = f.breakpoints
    for h in hs:
        nodes, weights = periodic_rule(grid, [*bp, *(b - h for b in bp)])
        d = np.abs(f(nodes + h) - f(nodes))
        best = max(best, float(np.dot(weights, d**p) ** (1.0 / p)))
    return best


def _compose_hint(hint: PhaseParam | None, a: PhaseParam) -> PhaseParam | None:
    # hint h means "g o theta_h^{-1} is tame"; composing with theta_a^{-1}
    if hint is None or hint.is_identity:
        return a.inverse()
    return None


def warp_signal(f, a) -> Signal:
    """``F = f o theta_a^{-1}``."""
    f = as_signal(f)
    a = as_phase(a)
    if a.is_identity:
        return f
    deriv = None
    if f.derivative is not None:
        fd = f.derivative

        def deriv(s):
            x = theta_inv(a, s)
            return fd(x) / poisson_weight(a, x)

    return Signal(
        lambda s: f(theta_inv(a, s)),
        name=f"warp[{f.name}]",
        kind=f.kind,
        jumps=tuple(float(theta(a, b)) for b in f.jumps),
        kinks=tuple(float(theta(a, b)) for b in f.kinks),
        derivative=deriv,
        phase=_compose_hint(f.phase, a),
        is_complex=f.is_complex,
    )


def unwarp_signal(F, a) -> Signal:
    """``f = F o theta_a``; inverse of :func:`warp_signal`."""
    F = as_signal(F)
    a = as_phase(a)
    if a.is_identity:
        return F
    deriv = None
    if F.derivative is not None:
        Fd = F.derivative

        def deriv(t):
            return Fd(theta(a, t)) * poisson_weight(a, t)

    hint = a if F.phase is None else None
    return Signal(
        lambda t: F(theta(a, t)),
        name=f"unwarp[{F.name}]",
        kind=F.kind,
        jumps=tuple(float(theta_inv(a, b)) for b in F.jumps),
        kinks=tuple(float(theta_inv(a, b)) for b in F.kinks),
        derivative=deriv,
        phase=hint,
        is_complex=F.is_complex,
    )


def read_csv_signal(path, points: int | None = None, name: str | None = None) -> Signal:
    """Load ``t,value[,imag]`` rows (header optional) as a sampled signal.

    Times are reduced modulo 2 pi.  Rows already forming a uniform
    power-of-two grid are used as-is; anything else is resampled by periodic
    linear interpolation onto ``points`` (default: next power of two, >= 16)
    uniform nodes, then interpolated trigonometrically.
    """
    rows = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                rows.append([float(x) for x in row])
            except ValueError:
                if rows:
                    raise ValueError(f"{path}: non-numeric row {row!r}") from None
                continue  # header
    if not rows:
        raise ValueError(f"{path}: no data rows")
    width = {len(r) for r in rows}
    if len(width) != 1 or width.pop() not in (2, 3):
        raise ValueError(f"{path}: expected 2 or 3 numeric columns per row")
    data = np.array(rows)
    t = data[:, 0]
    values = data[:, 1] + 1j * data[:, 2] if data.shape[1] == 3 else data[:, 1]
    order = np.argsort(np.mod(t + math.pi, TWO_PI))
    t, values = t[order], values[order]
    n = t.size
    target = points or max(16, 1 << (n - 1).bit_length())
    step = TWO_PI / n
    uniform = (
        n == target
        and n >= 16
        and not n & (n - 1)
        and np.allclose(np.diff(np.mod(t + math.pi, TWO_PI)), step, atol=1e-9 * TWO_PI)
    )
    label = name or str(path)
    if uniform:
        offset = float(np.mod(t[0] + math.pi, TWO_PI))
        return Signal.from_samples(values, offset=offset, name=label)
    grid = GridSpec(target)
    tt = np.mod(t + math.pi, TWO_PI) - math.pi
    if np.iscomplexobj(values):
        resampled = (np.interp(grid.nodes, tt, values.real, period=TWO_PI)
                     + 1j * np.interp(grid.nodes, tt, values.imag, period=TWO_PI))
    else:
        resampled = np.interp(grid.nodes, tt, values, period=TWO_PI)
    return Signal.from_samples(resampled, name=label)
