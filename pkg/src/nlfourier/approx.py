"""Best approximation errors, convergence diagnostics and inequality checks.

Every ``verify_*`` function returns a :class:`VerifyReport` whose ``passed``
flag is ``lhs <= rhs + tolerance``; the tolerance is the declared accuracy of
the estimators feeding the two sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_degree, check_degrees, check_p
from .kernels import lebesgue_constant
from .numerics import (
    GridSpec,
    Signal,
    as_signal,
    interval_rule,
    lp_norm,
    modulus_smoothness,
    sup_norm,
    warp_signal,
    warped_rule,
)
from .phase import PhaseParam, as_phase, theta
from .remez import trig_remez
from .transform import (
    CoeffVector,
    NlPolynomial,
    _next_pow2,
    analyze,
    cesaro_coeffs,
    required_points,
)

__all__ = [
    "VerifyReport",
    "DecayCurve",
    "BestApproximation",
    "PointwiseReport",
    "GibbsResult",
    "best_approx_error",
    "verify_jackson",
    "verify_modulus_sandwich",
    "verify_lebesgue_bound",
    "verify_lebesgue_lp_bound",
    "verify_near_best",
    "verify_fejer_contraction",
    "convergence_curve",
    "approximation_error",
    "pointwise_convergence_check",
    "gibbs_overshoot",
    "classical_gibbs_overshoot",
    "verify_corpus",
    "THEOREM_IDS",
]

THEOREM_IDS = (
    "lebesgue-sup",
    "lebesgue-lp",
    "fejer-sup",
    "fejer-lp",
    "jackson",
    "modulus-sandwich",
    "near-best",
)

JACKSON_CONSTANT = 24.0
REMEZ_MAX_ITER = 60
REMEZ_TOL = 1e-8
IRLS_ITER = 40
IRLS_DAMPING = 0.5
FEJER_REL_TOL = 1e-9
# relative accuracy claimed for quadrature-based norms
NORM_REL_TOL = 1e-9
# absolute floor, relative to ||f||_inf, below which differences are rounding
ABS_FLOOR = 1e-10


@dataclass(frozen=True, eq=False)
class VerifyReport:
    """Outcome of one inequality check ``lhs <= rhs``."""

    theorem_id: str
    lhs: float
    rhs: float
    constant_used: float
    tolerance: float
    context: dict
    details: dict = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return bool(self.lhs <= self.rhs + self.tolerance)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "constant_used": self.constant_used,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "context": _jsonable(self.context),
            "details": _jsonable(self.details),
        }


@dataclass(frozen=True, eq=False)
class DecayCurve:
    ns: list
    values: list
    fitted_rate: float
    converging: bool

    def __post_init__(self):
        check_degrees(self.ns)
        if any(v < 0 for v in self.values):
            raise ValueError("decay values must be nonnegative")


@dataclass(frozen=True, eq=False)
class BestApproximation:
    """``E_n^a(f)_p`` with bounds.

    ``value`` is the error of ``witness`` (an upper bound); ``lower`` is a
    proven-from-data lower bound.  ``certified`` means the two agree to the
    method tolerance.
    """

    value: float
    lower: float
    witness: NlPolynomial
    certified: bool
    method: str
    iterations: int = 0

    @property
    def upper(self) -> float:
        return self.value


@dataclass(frozen=True, eq=False)
class PointwiseReport:
    x: float
    target: float
    dini_estimate: float
    dini_finite: bool
    dini_ratios: list
    holder_ratio: float | None
    ns: list
    errors: list
    trending_to_zero: bool


@dataclass(frozen=True, eq=False)
class GibbsResult:
    n: int
    peak: float
    overshoot: float
    relative_to_half_jump: float
    relative_to_jump: float


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, PhaseParam):
        return [obj.modulus, obj.angle]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else ("inf" if v > 0 else "-inf" if v < 0 else "nan")
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _context(f: Signal, a: PhaseParam, n, p, grid) -> dict:
    return {"a": a, "n": n, "p": p, "signal": f.name, "grid": grid}


def _grid_for(a: PhaseParam, n: int, grid=None) -> GridSpec:
    if grid is not None:
        return grid if isinstance(grid, GridSpec) else GridSpec(int(grid))
    return GridSpec(max(4096, _next_pow2(2 * required_points(a, n))))


def _poly_signal(cv: CoeffVector, name: str) -> Signal:
    return NlPolynomial(cv).as_signal(name)


def _difference(f: Signal, poly: Signal, a: PhaseParam) -> Signal:
    return Signal(
        lambda t: f(t) - poly(t),
        name=f"{f.name}-{poly.name}",
        kind=f.kind,
        jumps=f.jumps,
        kinks=f.kinks,
        phase=a if not a.is_identity else None,
        is_complex=f.is_complex or poly.is_complex,
    )


def _coeffs(f: Signal, a: PhaseParam, n: int, coeffs: CoeffVector | None) -> CoeffVector:
    if coeffs is None:
        return analyze(f, a, n)
    if coeffs.degree < n:
        raise ValueError(f"cached coefficients have degree {coeffs.degree} < {n}")
    return coeffs.truncate(n)


# --- best approximation -------------------------------------------------------


def _real_to_complex(tc: np.ndarray) -> np.ndarray:
    n = (len(tc) - 1) // 2
    a_k, b_k = tc[1 : n + 1], tc[n + 1 :]
    pos = 0.5 * (a_k - 1j * b_k)
    return np.concatenate([np.conj(pos[::-1]), [tc[0]], pos])


def _design(a: PhaseParam, n: int, t: np.ndarray) -> np.ndarray:
    return np.exp(1j * np.multiply.outer(np.asarray(theta(a, t)), np.arange(-n, n + 1)))


def _weighted_lstsq(B, values, w):
    sw = np.sqrt(w)
    return np.linalg.lstsq(B * sw[:, None], values * sw, rcond=None)[0]


def _norm_on_rule(values, weights, p) -> float:
    v = np.abs(values)
    if math.isinf(p):
        return float(v.max(initial=0.0))
    peak = v.max(initial=0.0)
    if peak == 0.0:
        return 0.0
    return float(peak * np.dot(weights, (v / peak) ** p) ** (1.0 / p))


def best_approx_error(f, a, n: int, p=2.0, grid=None) -> BestApproximation:
    """``E_n^a(f)_p = inf_{T in tau_n^a} ||f - T||_p``.

    * ``p = 2``: least squares over ``tau_n^a`` in the unweighted ``L^2``
      norm, exact up to quadrature.
    * ``p = inf``: Remez exchange on ``F = f o theta_a^{-1}``, since the sup
      norm is invariant under the warp.  Complex ``f`` falls back to a
      Lawson iteration (upper bound only).
    * other ``p``: iteratively reweighted least squares (upper bound), with
      the duality lower bound ``||r||_2^2 / ||r||_{p'}`` where ``r`` is the
      ``L^2`` residual.
    """
    f = as_signal(f)
    a = as_phase(a)
    n = check_degree(n)
    p = check_p(p)
    g = _grid_for(a, n, grid)
    if math.isinf(p):
        return _best_sup(f, a, n, g)
    nodes, weights = warped_rule(g, a, f.breakpoints)
    fx = f(nodes)
    B = _design(a, n, nodes)
    c2 = _weighted_lstsq(B, fx, weights)
    r2 = fx - B @ c2
    e2 = _norm_on_rule(r2, weights, 2.0)

    def witness(c):
        return NlPolynomial.from_array(a, c, real=not f.is_complex)

    if p == 2.0:
        return BestApproximation(e2, e2, witness(c2), True, "least-squares")
    q = p / (p - 1.0) if p > 1.0 else math.inf
    dual = _norm_on_rule(r2, weights, q)
    lower = e2 * e2 / dual if dual > 0 else 0.0
    c = c2
    floor = 1e-12 * max(float(np.max(np.abs(fx), initial=0.0)), 1e-300)
    for _ in range(IRLS_ITER):
        r = np.abs(fx - B @ c)
        w = weights * np.maximum(r, floor) ** (p - 2.0)
        c = IRLS_DAMPING * c + (1.0 - IRLS_DAMPING) * _weighted_lstsq(B, fx, w)
    upper = _norm_on_rule(fx - B @ c, weights, p)
    if upper > _norm_on_rule(r2, weights, p):
        c, upper = c2, _norm_on_rule(r2, weights, p)
    return BestApproximation(upper, min(lower, upper), witness(c), False, "irls", IRLS_ITER)


def _best_sup(f: Signal, a: PhaseParam, n: int, g: GridSpec) -> BestApproximation:
    F = warp_signal(f, a)
    if f.is_complex:
        return _lawson(F, f, a, n, g)
    points = max(8192, 64 * (n + 1), g.points)
    res = trig_remez(F, n, breakpoints=F.kinks, jumps=F.jumps, points=points,
                     max_iter=REMEZ_MAX_ITER, tol=REMEZ_TOL)
    witness = NlPolynomial.from_array(a, _real_to_complex(res.coeffs), real=True)
    return BestApproximation(res.upper, res.lower, witness, res.certified, "remez", res.iterations)


def _lawson(F: Signal, f: Signal, a: PhaseParam, n: int, g: GridSpec,
            iterations: int = 200) -> BestApproximation:
    points = max(8192, 64 * (n + 1), g.points)
    u = -math.pi + 2.0 * math.pi * np.arange(points) / points
    Fu = F(u)
    B = np.exp(1j * np.multiply.outer(u, np.arange(-n, n + 1)))
    w = np.full(points, 1.0 / points)
    c2 = _weighted_lstsq(B, Fu, w)
    r2 = Fu - B @ c2
    l1 = float(np.mean(np.abs(r2)))
    lower = float(np.mean(np.abs(r2) ** 2)) / l1 if l1 > 0 else 0.0
    c, best_c, best = c2, c2, float(np.max(np.abs(r2)))
    for _ in range(iterations):
        r = np.abs(Fu - B @ c)
        w = w * r
        total = w.sum()
        if total == 0:
            break
        w = w / total
        c = _weighted_lstsq(B, Fu, w)
        err = float(np.max(np.abs(Fu - B @ c)))
        if err < best:
            best, best_c = err, c
    witness = NlPolynomial.from_array(a, best_c, real=False)
    return BestApproximation(best, min(lower, best), witness, False, "lawson", iterations)


# --- sup-norm helpers --------------------------------------------------------


def _sup(sig: Signal, grid: GridSpec) -> tuple[float, float]:
    return sup_norm(sig, grid)


def _f_scale(f: Signal, grid: GridSpec) -> float:
    return _sup(f, grid)[0]


# --- verifiers ---------------------------------------------------------------


def verify_lebesgue_bound(f, a, n: int, grid=None, coeffs=None) -> VerifyReport:
    """``||S_n^a f||_inf <= Lambda_n ||f||_inf``."""
    f = as_signal(f)
    a = as_phase(a)
    n = check_degree(n)
    g = _grid_for(a, n, grid)
    cv = _coeffs(f, a, n, coeffs)
    lhs, lhs_tol = _sup(_poly_signal(cv, "S"), g)
    fnorm = _f_scale(f, g)
    lam = lebesgue_constant(n)
    rhs = lam * fnorm
    tol = NORM_REL_TOL * rhs + ABS_FLOOR * fnorm
    return VerifyReport("lebesgue-sup", lhs, rhs, lam, tol, _context(f, a, n, math.inf, g.points),
                        {"f_norm": fnorm, "polish": lhs_tol})


def verify_lebesgue_lp_bound(f, a, n: int, p: float, grid=None, coeffs=None) -> VerifyReport:
    """``||S_n^a f||_p <= ((1+|a|)/(1-|a|))^{2/p} Lambda_n ||f||_p`` for finite ``p``."""
    f = as_signal(f)
    a = as_phase(a)
    n = check_degree(n)
    p = check_p(p, allow_inf=False)
    g = _grid_for(a, n, grid)
    cv = _coeffs(f, a, n, coeffs)
    lhs = lp_norm(_poly_signal(cv, "S"), p, g)
    fnorm = lp_norm(f, p, g)
    const = a.distortion ** (2.0 / p) * lebesgue_constant(n)
    rhs = const * fnorm
    tol = NORM_REL_TOL * rhs + ABS_FLOOR * fnorm
    return VerifyReport("lebesgue-lp", lhs, rhs, const, tol, _context(f, a, n, p, g.points),
                        {"f_norm": fnorm, "ratio": lhs / fnorm if fnorm else 0.0})


def verify_fejer_contraction(f, a, n: int, p=math.inf, grid=None, coeffs=None) -> VerifyReport:
    """``||sigma_n^a f||_p <= C ||f||_p`` with ``C = 1`` at ``p = inf`` and
    ``((1+|a|)/(1-|a|))^{2/p}`` otherwise."""
    f = as_signal(f)
    a = as_phase(a)
    n = check_degree(n)
    p = check_p(p)
    g = _grid_for(a, n, grid)
    cv = cesaro_coeffs(_coeffs(f, a, n, coeffs))
    sig = _poly_signal(cv, "sigma")
    if math.isinf(p):
        lhs, fnorm, const = _sup(sig, g)[0], _f_scale(f, g), 1.0
        theorem = "fejer-sup"
    else:
        lhs, fnorm, const = lp_norm(sig, p, g), lp_norm(f, p, g), a.distortion ** (2.0 / p)
        theorem = "fejer-lp"
    rhs = const * fnorm
    ratio = lhs / fnorm if fnorm else 0.0
    details = {"f_norm": fnorm, "ratio": ratio}
    if not math.isinf(p) and not a.is_identity and ratio > 1.0:
        # exponent of the distortion actually needed by the data
        details["needed_exponent"] = math.log(ratio) / math.log(a.distortion)
    return VerifyReport(theorem, lhs, rhs, const, FEJER_REL_TOL * rhs,
                        _context(f, a, n, p, g.points), details)


def verify_jackson(f, a, n: int, grid=None, best: BestApproximation | None = None) -> VerifyReport:
    """``E_n^a(f)_inf <= 24/(1-|a|) * omega(f, 1/n)_inf``.

    The left side is the Remez upper value, the modulus is a lower estimate,
    so the check is conservative on both sides.
    """
    f = as_signal(f)
    a = as_phase(a)
    n = check_degree(n, minimum=1)
    g = _grid_for(a, n, grid)
    best = best or best_approx_error(f, a, n, math.inf, g)
    omega = modulus_smoothness(f, 1.0 / n, math.inf, g)
    const = JACKSON_CONSTANT / (1.0 - a.modulus)
    rhs = const * omega
    scale = _f_scale(f, g)
    tol = ABS_FLOOR * scale
    return VerifyReport("jackson", best.upper, rhs, const, tol,
                        _context(f, a, n, math.inf, g.points),
                        {"omega": omega, "E_lower": best.lower, "certified": best.certified})


def verify_modulus_sandwich(f, a, t: float, grid=None) -> VerifyReport:
    """``(1-|a|)/2 * omega(f,t) <= omega(F,t) <= 2/(1-|a|) * omega(f,t)``.

    Both inequalities are evaluated; the report carries the side with the
    smaller relative margin and passes only if both hold.
    """
    f = as_signal(f)
    a = as_phase(a)
    t = float(t)
    if not 0.0 < t <= math.pi:
        raise ValueError(f"t must lie in (0, pi], got {t}")
    g = _grid_for(a, 0, grid)
    F = warp_signal(f, a)
    wf = modulus_smoothness(f, t, math.inf, g)
    wF = modulus_smoothness(F, t, math.inf, g)
    c_lo = (1.0 - a.modulus) / 2.0
    c_hi = 2.0 / (1.0 - a.modulus)
    tol = NORM_REL_TOL * max(wf, wF) + ABS_FLOOR * _f_scale(f, g)
    lower_ok = c_lo * wf <= wF + tol
    upper_ok = wF <= c_hi * wf + tol
    rel_lo = (wF - c_lo * wf) / max(wF, 1e-300)
    rel_hi = (c_hi * wf - wF) / max(c_hi * wf, 1e-300)
    if not upper_ok or (lower_ok and rel_hi <= rel_lo):
        lhs, rhs, const, side = wF, c_hi * wf, c_hi, "upper"
    else:
        lhs, rhs, const, side = c_lo * wf, wF, c_lo, "lower"
    ctx = _context(f, a, None, math.inf, g.points)
    ctx["t"] = t
    return VerifyReport("modulus-sandwich", lhs, rhs, const, tol, ctx,
                        {"omega_f": wf, "omega_F": wF, "side": side,
                         "lower_holds": bool(lower_ok), "upper_holds": bool(upper_ok)})


def verify_near_best(f, a, n: int, grid=None, coeffs=None,
                     best: BestApproximation | None = None) -> VerifyReport:
    """``||f - S_n^a f||_inf <= (1 + Lambda_n) E_n^a(f)_inf``.

    ``E`` enters through its certified lower bound, so the check cannot pass
    by overestimating it.
    """
    f = as_signal(f)
    a = as_phase(a)
    n = check_degree(n, minimum=2)
    g = _grid_for(a, n, grid)
    cv = _coeffs(f, a, n, coeffs)
    lhs = _sup(_difference(f, _poly_signal(cv, "S"), a), g)[0]
    best = best or best_approx_error(f, a, n, math.inf, g)
    const = 1.0 + lebesgue_constant(n)
    rhs = const * best.lower
    tol = NORM_REL_TOL * rhs + ABS_FLOOR * _f_scale(f, g)
    return VerifyReport("near-best", lhs, rhs, const, tol, _context(f, a, n, math.inf, g.points),
                        {"E_lower": best.lower, "E_upper": best.upper,
                         "certified": best.certified})


# --- convergence --------------------------------------------------------------


def approximation_error(f, a, n: int, operator: str = "partial_sum", p=math.inf,
                        grid=None, coeffs=None) -> float:
    """``||f - S_n^a f||_p`` or ``||f - sigma_n^a f||_p``."""
    f = as_signal(f)
    a = as_phase(a)
    p = check_p(p)
    g = _grid_for(a, n, grid)
    cv = _coeffs(f, a, n, coeffs)
    if operator == "cesaro":
        cv = cesaro_coeffs(cv)
    elif operator != "partial_sum":
        raise ValueError(f"operator must be 'partial_sum' or 'cesaro', got {operator!r}")
    diff = _difference(f, _poly_signal(cv, operator), a)
    return lp_norm(diff, p, g)


def convergence_curve(f, a, operator: str = "partial_sum", p=math.inf, ns=(2, 4, 8, 16, 32, 64),
                      grid=None, coeffs=None) -> DecayCurve:
    """Errors along ``ns`` with the least-squares log-log slope."""
    f = as_signal(f)
    a = as_phase(a)
    ns = check_degrees(ns)
    cv = coeffs if coeffs is not None else analyze(f, a, ns[-1])
    values = [approximation_error(f, a, n, operator, p, grid, cv) for n in ns]
    pos = [(n, v) for n, v in zip(ns, values) if v > 0]
    if len(pos) >= 2:
        rate = float(np.polyfit(np.log([n for n, _ in pos]), np.log([v for _, v in pos]), 1)[0])
    else:
        rate = -math.inf
    return DecayCurve(list(ns), values, rate, bool(values[-1] < values[0]))


# --- pointwise behaviour --------------------------------------------------------


DINI_LEVELS = tuple(range(4, 15))
DINI_RATIO = 0.9


def _dini_integrals(F: Signal, u0: float, target: float, points: int = 512) -> list[float]:
    """``int_eps^pi |(F(u0+s) + F(u0-s) - 2 target)/s| ds`` for ``eps = 2^-j``.

    Computed in ``v = log s`` so every dyadic shell gets the same resolution.
    """

    def integrand(v):
        s = np.exp(v)
        return np.abs(F(u0 + s) + F(u0 - s) - 2.0 * target)

    logs = []
    for b in F.breakpoints:
        d = abs(math.remainder(b - u0, 2.0 * math.pi))
        if d > 0:
            logs.append(math.log(d))
            logs.append(math.log(2.0 * math.pi - d))
    out = []
    hi = math.log(math.pi)
    for j in DINI_LEVELS:
        lo = math.log(2.0 ** (-j))
        nodes, weights = interval_rule(lo, hi, points, logs)
        out.append(float(np.dot(weights, integrand(nodes))))
    return out


def pointwise_convergence_check(f, a, x: float, criterion="dini", ns=(16, 64, 256),
                                value: float | None = None, grid=None) -> PointwiseReport:
    """Dini-type test at ``x`` and the errors ``|S_n^a f(x) - target|``.

    ``target`` defaults to ``f(x)``; pass ``value`` to test convergence to a
    different number (for example a one-sided limit at a jump).
    ``criterion`` is ``"dini"`` or ``("holder", alpha, M)``; the Hoelder
    variant additionally reports ``sup_s |F(u0+s) - F(u0)| / (M |s|^alpha)``.
    """
    f = as_signal(f)
    a = as_phase(a)
    x = float(x)
    if not -math.pi <= x < math.pi:
        raise ValueError(f"x must lie in [-pi, pi), got {x}")
    ns = check_degrees(ns)
    target = float(f(x)) if value is None else float(value)
    F = warp_signal(f, a)
    u0 = float(theta(a, x))
    ints = _dini_integrals(F, u0, target)
    inc = np.diff(ints)
    scale = max(abs(ints[-1]), 1.0)
    if np.all(np.abs(inc) <= 1e-13 * scale):
        ratios, finite = [], True
        estimate = ints[-1]
    else:
        ratios = [float(b / a_) if a_ > 0 else 0.0 for a_, b in zip(inc[:-1], inc[1:])]
        tail = ratios[-5:]
        finite = bool(max(tail) < DINI_RATIO)
        r = max(tail)
        estimate = ints[-1] + (inc[-1] * r / (1.0 - r) if finite else math.inf)
    holder_ratio = None
    if isinstance(criterion, (tuple, list)) and criterion[0] == "holder":
        alpha, M = float(criterion[1]), float(criterion[2])
        s = np.geomspace(1e-8, math.pi, 2000)
        s = np.concatenate([s, -s])
        holder_ratio = float(np.max(np.abs(F(u0 + s) - F(u0)) / (M * np.abs(s) ** alpha)))
    elif criterion != "dini":
        raise ValueError(f"unknown criterion {criterion!r}")
    cv = analyze(f, a, ns[-1], grid)
    errors = [abs(complex(NlPolynomial(cv.truncate(n))(x)) - target) for n in ns]
    trending = bool(errors[-1] < errors[0] or errors[-1] <= 1e-12)
    return PointwiseReport(x, target, float(estimate), finite, ratios, holder_ratio,
                           list(ns), errors, trending)


def classical_gibbs_overshoot(n: int) -> GibbsResult:
    """Gibbs overshoot of the classical partial sum of ``sign(t)``.

    Uses the closed form ``(4/pi) sum_{odd k <= n} sin(kt)/k``; the first
    maximum to the right of the jump is located by bracketing and Brent's
    method.
    """
    from scipy.optimize import minimize_scalar

    n = check_degree(n, minimum=1)
    ks = np.arange(1, n + 1, 2)

    def s(t):
        return (4.0 / math.pi) * np.sin(np.multiply.outer(np.atleast_1d(t), ks)) @ (1.0 / ks)

    t = np.linspace(1e-6, math.pi / 2, 64 * (n + 1))
    i = int(np.argmax(s(t)))
    lo, hi = t[max(i - 1, 0)], t[min(i + 1, t.size - 1)]
    res = minimize_scalar(lambda x: -float(s(x)[0]), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-14})
    peak = -float(res.fun)
    return _gibbs(n, peak)


def _gibbs(n: int, peak: float) -> GibbsResult:
    # sign(t): upper value 1, jump 2
    over = peak - 1.0
    return GibbsResult(n, peak, over, over / 1.0, over / 2.0)


def gibbs_overshoot(n: int, a=None, grid=None) -> GibbsResult:
    """Overshoot of ``S_n^a`` applied to the square wave ``sign(t)``."""
    from .signals import builtin

    a = as_phase(a)
    f = builtin("square")
    cv = analyze(f, a, n, grid)
    sig = _poly_signal(cv, "S")
    g = _grid_for(a, n, grid)
    peak = sup_norm(Signal(lambda t: np.real(sig(t)), phase=a if not a.is_identity else None), g)[0]
    return _gibbs(n, peak)


# --- corpus sweep -----------------------------------------------------------------


def verify_corpus(
    signals=None,
    moduli=(0.0, 0.3, 0.7, 0.95),
    degrees=(2, 4, 8, 16, 32, 64, 128),
    ps=(1.0, 2.0, 4.0),
    theorems=THEOREM_IDS,
    seed: int = 0,
    progress=None,
) -> list[VerifyReport]:
    """Run the selected checks over ``signals x moduli x degrees``.

    Coefficients are computed once per ``(signal, a)`` at the largest degree
    and truncated.  Checks whose hypotheses need continuity (``jackson``,
    ``near-best``) are skipped for signals with jumps.
    """
    from .signals import CORPUS, builtin

    unknown = set(theorems) - set(THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem ids {sorted(unknown)}; choose from {THEOREM_IDS}")
    degrees = check_degrees(degrees)
    names = CORPUS if signals is None else signals
    reports: list[VerifyReport] = []
    for mod in moduli:
        a = as_phase(mod)
        for item in names:
            f = builtin(item, a, seed) if isinstance(item, str) else as_signal(item)
            cv = analyze(f, a, degrees[-1])
            for n in degrees:
                batch = []
                if "lebesgue-sup" in theorems:
                    batch.append(verify_lebesgue_bound(f, a, n, coeffs=cv))
                if "lebesgue-lp" in theorems:
                    batch += [verify_lebesgue_lp_bound(f, a, n, p, coeffs=cv) for p in ps]
                if "fejer-sup" in theorems:
                    batch.append(verify_fejer_contraction(f, a, n, math.inf, coeffs=cv))
                if "fejer-lp" in theorems:
                    batch += [verify_fejer_contraction(f, a, n, p, coeffs=cv) for p in ps]
                if f.continuous and ({"jackson", "near-best"} & set(theorems)):
                    best = best_approx_error(f, a, n, math.inf)
                    if "jackson" in theorems:
                        batch.append(verify_jackson(f, a, n, best=best))
                    if "near-best" in theorems and n >= 2:
                        batch.append(verify_near_best(f, a, n, coeffs=cv, best=best))
                if "modulus-sandwich" in theorems:
                    batch.append(verify_modulus_sandwich(f, a, min(1.0 / n, math.pi)))
                reports += batch
                if progress is not None:
                    progress(f, a, n, batch)
    return reports
